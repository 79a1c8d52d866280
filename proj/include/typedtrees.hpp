#pragma once

#include "typedtrees/alphabet.hpp"
#include "typedtrees/cuts.hpp"
#include "typedtrees/generate.hpp"
#include "typedtrees/hopf.hpp"
#include "typedtrees/lincomb.hpp"
#include "typedtrees/literal.hpp"
#include "typedtrees/matrix.hpp"
#include "typedtrees/morphisms.hpp"
#include "typedtrees/operad.hpp"
#include "typedtrees/prelie.hpp"
#include "typedtrees/rational.hpp"
#include "typedtrees/series.hpp"
#include "typedtrees/tree.hpp"
#include "typedtrees/verify.hpp"
