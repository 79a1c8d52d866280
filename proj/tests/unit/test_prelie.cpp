#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace typedtrees;

namespace {

const Alphabets& abc() {
  static const Alphabets a{DecorationAlphabet({"a", "b", "c", "d"}), TypeAlphabet({"red", "green"})};
  return a;
}
const NamedSyntax syn{&abc()};

Tree tree(const std::string& s) { return parse_tree(s, syn); }
LinComb<Tree> lc(const std::string& s) { return LinComb<Tree>(tree(s)); }
std::string show(const LinComb<Tree>& x) {
  return render(x, [](const Tree& t) { return render(t, syn); });
}
std::string show(const LinComb<Forest>& x) {
  return render(x, [](const Forest& f) { return render(f, syn); });
}

VerifyContext one_decoration() {
  auto ctx = VerifyContext::standard();
  return ctx;
}

}  // namespace

TEST(Graft, AtRootAndAtLeaf) {
  EXPECT_EQ(render(graft_at(tree("a[red:b]"), {}, tree("c"), 0), syn), "a[red:b,red:c]");
  EXPECT_EQ(render(graft_at(tree("a[red:b]"), {0}, tree("c"), 1), syn), "a[red:b[green:c]]");
  EXPECT_THROW(graft_at(tree("a[red:b]"), {1}, tree("c"), 0), std::out_of_range);
}

TEST(PreLie, LadderTimesVertex) {
  EXPECT_EQ(show(prelie_product(tree("a[red:b]"), tree("c"), 0)), "1 * a[red:b,red:c] + 1 * a[red:b[red:c]]");
  Lambda l;
  l.set(0, 2);
  l.set(1, 3);
  EXPECT_EQ(show(prelie_product(lc("a[red:b]"), lc("c"), l)),
            "2 * a[red:b,red:c] + 3 * a[red:b,green:c] + 2 * a[red:b[red:c]] + 3 * a[red:b[green:c]]");
}

TEST(PreLie, EqualGraftingsAccumulate) {
  EXPECT_EQ(show(prelie_product(tree("a[red:b,red:b]"), tree("c"), 1)),
            "1 * a[red:b,red:b,green:c] + 2 * a[red:b,red:b[green:c]]");
}

TEST(PreLie, AgreesWithGraftingOracle) {
  auto gen = plain_enumerator(2, 2);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; n + m <= 5; ++m)
      for (const auto& x : gen.trees(n))
        for (const auto& y : gen.trees(m))
          for (TypeId t = 0; t < 2; ++t) EXPECT_EQ(prelie_product(x, y, t), oracle::graft_everywhere(x, y, t));
}

TEST(PreLie, NotAssociative) {
  const auto x = lc("a"), y = lc("b"), z = lc("c");
  EXPECT_NE(prelie_product(prelie_product(x, y, 0), z, 0), prelie_product(x, prelie_product(y, z, 0), 0));
}

TEST(PreLie, MultipleIdentityOnAllSmallTriples) {
  auto ctx = one_decoration();
  const auto r = check_multiple_prelie(ctx, 5);
  EXPECT_TRUE(r.passed) << r.counterexample;
  EXPECT_GT(r.instances, 100);
}

TEST(Nap, CorollaExample) {
  const auto r = nap_coproduct(tree("a[red:b,red:c,green:d]"), 0);
  auto key = [](const Tensor2<Tree>& k) {
    auto f = [](const Tree& t) { return render(t, syn); };
    return render_tensor(k, f, f);
  };
  EXPECT_EQ(render(r, key), "1 * a[red:c,green:d] | b + 1 * a[red:b,green:d] | c");
  EXPECT_TRUE(nap_coproduct(tree("a[green:b]"), 0).empty());
  Lambda mu;
  mu.set(0, 2);
  mu.set(1, 5);
  EXPECT_EQ(render(nap_coproduct(lc("a[red:b,green:c]"), mu), key), "2 * a[green:c] | b + 5 * a[red:b] | c");
}

TEST(Nap, SuiteOnSmallTrees) {
  auto ctx = one_decoration();
  for (const auto& r : {check_nap_coassociativity(ctx, 5), check_nap_compatibility(ctx, 5), check_nap_kernel(ctx, 5)}) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  }
}

TEST(GuinOudom, EmptyWordAndUnit) {
  const Forest f(std::vector<Tree>{tree("a[red:b]"), tree("c")});
  EXPECT_EQ(guin_oudom_action(f, DeltaWord<DecId>()), LinComb<Forest>(f));
  EXPECT_EQ(guin_oudom_action(Forest(), DeltaWord<DecId>()), LinComb<Forest>(Forest()));
  EXPECT_TRUE(guin_oudom_action(Forest(), DeltaWord<DecId>({{0, tree("a")}})).empty());
}

TEST(GuinOudom, VertexActionIsBPlus) {
  const DeltaWord<DecId> w({{1, tree("b")}, {0, tree("c[red:d]")}});
  EXPECT_EQ(show(guin_oudom_action(Forest(tree("a")), w)), "1 * a[red:c[red:d],green:b]");
  EXPECT_EQ(render(b_plus<DecId>(0, w), syn), "a[red:c[red:d],green:b]");
}

TEST(GuinOudom, ClosedFormMatchesRecursion) {
  auto gen = plain_enumerator(1, 2);
  std::vector<Branch> branches;
  for (int n = 1; n <= 2; ++n)
    for (const auto& t : gen.trees(n))
      for (TypeId ty = 0; ty < 2; ++ty) branches.push_back({ty, t});
  std::vector<std::vector<Branch>> words{{}};
  for (std::size_t i = 0; i < branches.size(); ++i) {
    words.push_back({branches[i]});
    for (std::size_t j = i; j < branches.size(); ++j) {
      words.push_back({branches[i], branches[j]});
      for (std::size_t k = j; k < branches.size(); ++k) words.push_back({branches[i], branches[j], branches[k]});
    }
  }
  long checked = 0;
  for (int n = 0; n <= 3; ++n)
    for (const auto& f : gen.forests(n))
      for (const auto& w : words) {
        if (n + static_cast<int>(w.size()) > 5) continue;
        EXPECT_EQ(guin_oudom_action(f, DeltaWord<DecId>(w)), oracle::act_recursive(f, w));
        ++checked;
      }
  EXPECT_GT(checked, 500);
}

TEST(GuinOudom, LambdaWordsSumOverTypes) {
  Lambda l;
  l.set(0, Rational(2, 3));
  l.set(1, -5);
  const Forest f(tree("a[red:b]"));
  const Forest w(std::vector<Tree>{tree("c"), tree("d")});
  LinComb<Forest> expected;
  for (TypeId s = 0; s < 2; ++s)
    for (TypeId t = 0; t < 2; ++t)
      expected.add(guin_oudom_action(f, DeltaWord<DecId>({{s, tree("c")}, {t, tree("d")}})), l[s] * l[t]);
  EXPECT_EQ(guin_oudom_action(f, w, l), expected);
}

TEST(GuinOudom, ProductsAndBPlus) {
  auto ctx = one_decoration();
  for (const auto& r : {check_action_derivation(ctx, 4), check_b_plus_action(ctx, 5)}) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  }
}

TEST(UniversalMorphism, IdentityOnGenerators) {
  auto gen = plain_enumerator(2, 2);
  const TreeAlgebra<DecId> ctx{};
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : gen.trees(n))
      EXPECT_EQ(universal_morphism(t, [](DecId d) { return LinComb<Tree>(Tree(d)); }, ctx), LinComb<Tree>(t));
}

TEST(UniversalMorphism, RespectsProducts) {
  // φ(•d) = d[red:a] into (trees, •_λ) with λ collapsing both types to red.
  const TreeAlgebra<DecId> ctx{Lambda::single(0)};
  auto images = [](DecId d) { return LinComb<Tree>(make_ladder<DecId>(d, 0, 0)); };
  auto gen = plain_enumerator(2, 2);
  for (const auto& x : gen.trees(2))
    for (const auto& y : gen.trees(1))
      for (TypeId t = 0; t < 2; ++t) {
        const auto lhs = universal_morphism(prelie_product(LinComb<Tree>(x), LinComb<Tree>(y), t), images, ctx);
        const auto rhs = ctx.product(universal_morphism(x, images, ctx), universal_morphism(y, images, ctx), t);
        EXPECT_EQ(lhs, rhs);
      }
}
