#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace typedtrees;

namespace {

const Alphabets& abc() {
  static const Alphabets a{DecorationAlphabet({"a", "b", "c", "d"}), TypeAlphabet({"red", "green"})};
  return a;
}

Tree tree(const std::string& s) { return parse_tree(s, NamedSyntax{&abc()}); }
Forest forest(const std::string& s) { return parse_forest(s, NamedSyntax{&abc()}); }
std::string show(const Tree& t) { return render(t, NamedSyntax{&abc()}); }
std::string show(const Forest& f) { return render(f, NamedSyntax{&abc()}); }

}  // namespace

TEST(Canonical, ChildOrderIsIrrelevant) {
  EXPECT_EQ(tree("a[green:c,red:b]"), tree("a[red:b,green:c]"));
  EXPECT_EQ(tree("a[red:c,red:b]"), tree("a[red:b,red:c]"));
  EXPECT_EQ(show(tree("a[green:c,red:b]")), "a[red:b,green:c]");
  EXPECT_EQ(show(tree("a[red:b, green:c]")), "a[red:b,green:c]");
}

TEST(Canonical, TypeBeforeSubtree) {
  // a red leaf sorts before a green one even when its subtree is larger
  EXPECT_EQ(show(tree("a[green:a,red:d[red:d]]")), "a[red:d[red:d],green:a]");
}

TEST(Canonical, CanonicalizeIsIdempotent) {
  Tree raw(0);
  raw.children.push_back({1, Tree(2)});
  raw.children.push_back({0, make_ladder<DecId>(1, 1, 0)});
  const Tree once = canonicalize(raw);
  EXPECT_TRUE(is_canonical(once));
  EXPECT_EQ(canonicalize(once), once);
}

TEST(Canonical, DistinctTypesGiveDistinctTrees) {
  EXPECT_NE(tree("a[red:b]"), tree("a[green:b]"));
  EXPECT_NE(tree("a[red:b]"), tree("b[red:a]"));
}

TEST(Literal, RoundTripOfGeneratedTrees) {
  auto gen = plain_enumerator(2, 2);
  const Alphabets ab{DecorationAlphabet({"a", "b"}), TypeAlphabet({"red", "green"})};
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : gen.trees(n)) {
      const std::string s = render(t, NamedSyntax{&ab});
      EXPECT_EQ(parse_tree(s, NamedSyntax{&ab}), t) << s;
    }
}

TEST(Literal, EmptyForestIsOne) {
  EXPECT_TRUE(forest("1").empty());
  EXPECT_EQ(show(Forest()), "1");
  EXPECT_EQ(show(forest("b a[red:b] a")), "a a[red:b] b");
}

TEST(Literal, ErrorsCarryLineAndColumn) {
  try {
    tree("a[red:b");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 8);
  }
  try {
    tree("a[red:b,\ngreen b]");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 6);
  }
  EXPECT_THROW(tree("a[blue:b]"), AlphabetError);
  EXPECT_THROW(tree("e"), AlphabetError);
  EXPECT_THROW(tree("a]"), ParseError);
}

TEST(Alphabet, RejectsBadNames) {
  EXPECT_THROW(DecorationAlphabet({"a", "a"}), AlphabetError);
  EXPECT_THROW(DecorationAlphabet({"1"}), AlphabetError);
  EXPECT_THROW(TypeAlphabet({"red", "re d"}), AlphabetError);
  EXPECT_THROW(abc().types.check(2), AlphabetError);
}

TEST(Alphabet, SemigroupTablesAreChecked) {
  DecorationAlphabet d({"a", "b"});
  EXPECT_FALSE(d.has_semigroup());
  EXPECT_THROW(d.add(0, 1), AlphabetError);
  EXPECT_THROW(d.set_semigroup({{0, 1}, {0, 1}}), AlphabetError);  // not commutative
  EXPECT_THROW(d.set_semigroup({{1, 0}, {0, 0}}), AlphabetError);  // not associative
  d.set_max_semigroup();
  EXPECT_EQ(d.add(0, 1), 1);
  EXPECT_EQ(d.add(0, 0), 0);
  DecorationAlphabet one({"x"});
  EXPECT_TRUE(one.has_semigroup());
  EXPECT_EQ(one.add(0, 0), 0);
}

TEST(SymmetryFactor, MatchesAutomorphismCount) {
  auto gen = plain_enumerator(2, 2);
  for (int n = 1; n <= 5; ++n)
    for (const auto& f : gen.forests(n)) {
      EXPECT_EQ(symmetry_factor(f), Integer(oracle::automorphisms(f))) << show(f);
    }
}

TEST(SymmetryFactor, SmallValues) {
  EXPECT_EQ(symmetry_factor(tree("a[red:b,red:b]")), 2);
  EXPECT_EQ(symmetry_factor(tree("a[red:b,green:b]")), 1);
  EXPECT_EQ(symmetry_factor(forest("a[red:b,red:b] a[red:b,red:b] c")), 8);
}

TEST(FlatForest, AddressesFollowCanonicalOrder) {
  const Tree t = tree("a[red:b[green:c],green:d]");
  const auto addrs = vertex_addresses(t);
  ASSERT_EQ(addrs.size(), 4u);
  EXPECT_EQ(find_vertex(t, Address{0, 0})->dec, abc().decorations.id("c"));
  EXPECT_EQ(find_vertex(t, Address{1})->dec, abc().decorations.id("d"));
  EXPECT_EQ(find_vertex(t, Address{2}), nullptr);
}

TEST(Forest, ProductIsSortedUnion) {
  EXPECT_EQ(forest("b a") * forest("a[red:b]"), forest("a b a[red:b]"));
  EXPECT_EQ(forest("1") * forest("c"), forest("c"));
}
