#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace typedtrees;

namespace {

std::vector<long> as_longs(const IntSeries& s, int from, int to) {
  std::vector<long> out;
  for (int n = from; n <= to; ++n) out.push_back(s[static_cast<std::size_t>(n)].get_si());
  return out;
}

std::vector<long> generated(int D, int T, int to) {
  auto gen = plain_enumerator(D, T);
  std::vector<long> out;
  for (int n = 1; n <= to; ++n) out.push_back(static_cast<long>(gen.trees(n).size()));
  return out;
}

}  // namespace

TEST(Series, EulerTransformOfOnesIsPartitions) {
  IntSeries ones(8, 1);
  ones[0] = 0;
  EXPECT_EQ(as_longs(euler_transform(ones, 7), 0, 7), (std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15}));
}

TEST(Series, UntypedRootedTrees) {
  const std::vector<long> expected{1, 1, 2, 4, 9, 20, 48, 115};
  EXPECT_EQ(as_longs(tree_series(1, 1, 8), 1, 8), expected);
  EXPECT_EQ(generated(1, 1, 8), expected);
}

TEST(Series, TwoTypesOneDecoration) {
  const std::vector<long> expected{1, 2, 7, 26, 107, 458};
  EXPECT_EQ(as_longs(tree_series(1, 2, 6), 1, 6), expected);
  EXPECT_EQ(generated(1, 2, 6), expected);
  const IntSeries moved = tree_series(2, 1, 6);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(moved[static_cast<std::size_t>(n)] / 2, expected[static_cast<std::size_t>(n - 1)]);
}

TEST(Series, GrowthOracleAgreesWithSeriesAndEnumerator) {
  for (int D = 1; D <= 2; ++D)
    for (int T = 1; T <= 2; ++T) {
      const IntSeries s = tree_series(D, T, 5);
      auto gen = plain_enumerator(D, T);
      for (int n = 1; n <= 5; ++n) {
        const auto grown = oracle::grown_trees(n, D, T);
        EXPECT_EQ(Integer(static_cast<unsigned long>(grown.size())), s[static_cast<std::size_t>(n)]) << D << T << n;
        const auto& listed = gen.trees(n);
        EXPECT_TRUE(std::equal(listed.begin(), listed.end(), grown.begin(), grown.end())) << D << T << n;
      }
    }
}

TEST(Series, FrozenTwoByTwoValues) {
  // from the growth oracle
  EXPECT_EQ(as_longs(tree_series(2, 2, 6), 1, 6), (std::vector<long>{2, 8, 52, 376, 2998, 25256}));
  EXPECT_EQ(as_longs(tree_series(2, 1, 6), 1, 6), (std::vector<long>{2, 4, 14, 52, 214, 916}));
}

TEST(Series, TransportAcrossTypeCounts) {
  for (int D = 1; D <= 3; ++D)
    for (int T = 1; T <= 3; ++T) {
      const IntSeries typed = tree_series(D, T, 7);
      const IntSeries merged = tree_series(T * D, 1, 7);
      for (int n = 1; n <= 7; ++n) EXPECT_EQ(typed[static_cast<std::size_t>(n)] * T, merged[static_cast<std::size_t>(n)]);
    }
}

TEST(Series, Forests) {
  const IntSeries f = forest_series(tree_series(1, 2, 5), 5);
  EXPECT_EQ(f[2], 3);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(f[static_cast<std::size_t>(n)], oracle::grown_forest_count(n, 1, 2));
    EXPECT_EQ(f[static_cast<std::size_t>(n)], static_cast<long>(plain_enumerator(1, 2).forests(n).size()));
  }
}

TEST(Series, RestrictedCounts) {
  const std::vector<long> expected{1, 1, 3, 10, 39, 160};
  EXPECT_EQ(as_longs(restricted_tree_series(1, 2, 6), 1, 6), expected);
  auto gen = plain_enumerator(1, 2);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(static_cast<long>(gen.restricted(n, 0).size()), expected[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(static_cast<long>(gen.restricted(n, 1).size()), expected[static_cast<std::size_t>(n - 1)]);
  }
  for (int D = 1; D <= 3; ++D)
    for (int T = 1; T <= 3; ++T) EXPECT_EQ(restricted_tree_series(D, T, 2)[2], D * D * (T - 1));
}

TEST(ClosedForms, CorrectedFormsMatchSeries) {
  for (int D = 1; D <= 3; ++D)
    for (int T = 1; T <= 3; ++T)
      for (int n = 1; n <= 7; ++n) EXPECT_NO_THROW(closed_form_check(D, T, n)) << D << " " << T << " " << n;
  EXPECT_EQ(closed_form_check(3, 2, 2), 18);
  EXPECT_EQ(closed_form_check(1, 1, 3), 2);
}

TEST(ClosedForms, ReportFlagsExactlyThePrintedTypos) {
  const auto report = tree_discrepancy_report(3);
  ASSERT_EQ(report.size(), 3u);
  EXPECT_EQ(report[0].n, 2);
  EXPECT_EQ(report[0].formula, "D^2t");
  EXPECT_EQ(report[1].n, 3);
  EXPECT_EQ(report[1].formula, "D^2T(3D+1)/2");
  EXPECT_EQ(report[1].D, 1);
  EXPECT_EQ(report[1].T, 2);
  EXPECT_EQ(report[2].n, 4);
  EXPECT_EQ(report[2].formula, "D^2T(8S^2T^2+3DT+1)/3");
  EXPECT_TRUE(restricted_discrepancy_report(3).empty());
}

TEST(ClosedForms, RestrictedFormsMatchGeneration) {
  for (int D = 1; D <= 2; ++D)
    for (int T = 1; T <= 3; ++T) {
      auto gen = plain_enumerator(D, T);
      for (const auto& form : restricted_closed_forms()) {
        const Rational v = evaluate_formula(form.corrected, {{'D', D}, {'T', T}});
        EXPECT_EQ(v, Rational(static_cast<unsigned long>(gen.restricted(form.n, 0).size()))) << form.corrected;
      }
    }
}

TEST(Formula, Evaluator) {
  const std::map<char, Rational> v{{'D', 2}, {'T', 3}};
  EXPECT_EQ(evaluate_formula("D^2T", v), 12);
  EXPECT_EQ(evaluate_formula("D^2T(3DT+1)/2", v), 114);
  EXPECT_EQ(evaluate_formula("(D+T)^2-D*T", v), 19);
  EXPECT_EQ(evaluate_formula("-D+1/3", v), Rational(-5, 3));
  EXPECT_THROW(evaluate_formula("D^2t", v), UnknownSymbol);
  EXPECT_THROW(evaluate_formula("D+", v), std::invalid_argument);
}
