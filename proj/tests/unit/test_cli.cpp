#include "typedtrees/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "typedtrees");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = typedtrees::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, CountTrees) {
  const auto r = run({"count", "-D", "1", "-T", "1", "-n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\t1\n2\t1\n3\t2\n4\t4\n5\t9\n6\t20\n7\t48\n8\t115\n");
}

TEST(Cli, CountMethodsAgree) {
  const auto series = run({"count", "-D", "2", "-T", "3", "-n", "7"});
  for (const char* m : {"transport", "closed"}) {
    EXPECT_EQ(run({"count", "-D", "2", "-T", "3", "-n", "7", "--method", m}).out, series.out) << m;
  }
  EXPECT_EQ(run({"count", "-T", "2", "-n", "6", "--method", "transport"}).out,
            "1\t1\n2\t2\n3\t7\n4\t26\n5\t107\n6\t458\n");
  EXPECT_EQ(run({"count", "-T", "2", "-n", "6", "--restricted", "--method", "generate"}).out,
            "1\t1\n2\t1\n3\t3\n4\t10\n5\t39\n6\t160\n");
  EXPECT_EQ(run({"count", "-T", "2", "-n", "3", "--forests"}).out, "1\t1\n2\t3\n3\t10\n");
  EXPECT_EQ(run({"count", "--forests", "--method", "closed"}).code, 2);
}

TEST(Cli, DiscrepancyReport) {
  const auto r = run({"count", "--report"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_NE(r.out.find("trees\tn=2"), std::string::npos);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(run({"enumerate", "--forests", "-n", "2", "-D", "1", "-T", "2", "--decorations", "a"}).out,
            "a a\na[red:a]\na[green:a]\n");
}

TEST(Cli, GraftAndPrelie) {
  EXPECT_EQ(run({"graft", "a[red:b]", "c", "--type", "red"}).out, "a[red:b,red:c]\n");
  EXPECT_EQ(run({"graft", "a[red:b]", "c", "--at", "/0", "--type", "green"}).out, "a[red:b[green:c]]\n");
  EXPECT_EQ(run({"prelie", "a[red:b]", "c", "--type", "red"}).out, "1 * a[red:b,red:c] + 1 * a[red:b[red:c]]\n");
  EXPECT_EQ(run({"prelie", "a[red:b]", "c", "--type", "red", "--lambda", "red=1"}).code, 2);
}

TEST(Cli, PrelieOutputFeedsBack) {
  const auto first = run({"prelie", "a", "b", "--type", "red"});
  ASSERT_EQ(first.code, 0);
  std::string lc = first.out;
  lc.pop_back();
  const auto second = run({"prelie", lc, "c", "--type", "green"});
  EXPECT_EQ(second.code, 0);
  EXPECT_EQ(second.out, "1 * a[red:b,green:c] + 1 * a[red:b[green:c]]\n");
}

TEST(Cli, HopfCommands) {
  EXPECT_EQ(run({"ck", "a[red:b]"}).out, "1 * a[red:b] | 1 + 1 * 1 | a[red:b] + 1 * a | b\n");
  EXPECT_EQ(run({"ck", "--algorithm", "recursive", "a[red:b]"}).out, run({"ck", "a[red:b]"}).out);
  EXPECT_EQ(run({"antipode", "a[red:b]"}).out, "1 * a b + -1 * a[red:b]\n");
  EXPECT_EQ(run({"--lambda", "red=2,green=3", "star", "a[red:b]", "c"}).out,
            "1 * a[red:b] c + 2 * a[red:b,red:c] + 3 * a[red:b,green:c] + 2 * a[red:b[red:c]] + 3 * a[red:b[green:c]]\n");
  EXPECT_EQ(run({"pair", "a[red:b]", "a[green:b]"}).out, "0\n");
  EXPECT_EQ(run({"pair", "a[red:b,red:b]", "a[red:b,red:b]"}).out, "2\n");
  EXPECT_EQ(run({"nap", "a[red:b,red:c]", "--type", "red"}).out, "1 * a[red:c] | b + 1 * a[red:b] | c\n");
  EXPECT_EQ(run({"delta", "x[red:x,red:x]"}).out,
            "1 * x[red:x,red:x] | x x x + 2 * x[red:x] | x x[red:x] + 1 * x | x[red:x,red:x]\n");
  EXPECT_EQ(run({"delta", "a[red:b]"}).code, 1);
  EXPECT_EQ(run({"--semigroup", "max", "delta", "a[red:b]"}).out, "1 * a[red:b] | a b + 1 * b | a[red:b]\n");
}

TEST(Cli, Morphisms) {
  const std::string m = temp_file("tt_matrix.txt", "2 3\n5 7\n");
  EXPECT_EQ(run({"phi", "--matrix", m, "x[red:y]"}).out, "2 * x[red:y] + 5 * x[green:y]\n");
  const std::string bad = temp_file("tt_bad_matrix.txt", "1 2 3\n");
  EXPECT_EQ(run({"phi", "--matrix", bad, "x[red:y]"}).code, 1);
  EXPECT_EQ(run({"--lambda", "red=2,green=3", "psi-star", "x[green:x]"}).out, "3 * {x}[_:{x}] + 1 * {x[green:x]}\n");
}

TEST(Cli, Compose) {
  EXPECT_EQ(run({"compose", "--classical", "1[red:2]", "1", "1[green:2]"}).out,
            "1 * 1[red:3,green:2] + 1 * 1[green:2[red:3]]\n");
  EXPECT_EQ(run({"compose", "1[red:2]", "1", "2"}).code, 1);
}

TEST(Cli, ConfigFile) {
  const std::string cfg = temp_file("tt_config.ini", "lambda=red=2,green=3\ntypes=red,green\n");
  EXPECT_EQ(run({"--config", cfg, "star", "a", "b"}).out, "1 * a b + 2 * a[red:b] + 3 * a[green:b]\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--method", "bogus"}).code, 2);
  const auto parse = run({"ck", "a[red:b"});
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("line 1, column 8"), std::string::npos);
  EXPECT_EQ(run({"--lambda", "purple=1", "ck", "a"}).code, 1);
  EXPECT_EQ(run({"--types", "r,g", "-T", "3", "count"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--suite", "prelie", "--max-size", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS "), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
