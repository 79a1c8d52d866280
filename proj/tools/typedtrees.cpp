#include "typedtrees/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return typedtrees::cli::run(argc, argv, std::cout, std::cerr); }
