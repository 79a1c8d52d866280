#pragma once

// Exhaustive property checks over all small instances. Each property reports
// how many instances it examined and the first counterexample found.

#include "typedtrees/generate.hpp"
#include "typedtrees/hopf.hpp"
#include "typedtrees/literal.hpp"
#include "typedtrees/morphisms.hpp"
#include "typedtrees/operad.hpp"
#include "typedtrees/prelie.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace typedtrees {

struct PropertyResult {
  std::string name;
  bool passed = true;
  long instances = 0;
  std::string counterexample;
};

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  /// Records one instance; `describe` is only called for the first failure.
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  const PropertyResult& result() const { return result_; }

 private:
  PropertyResult result_;
};

/// Alphabets, parameter vectors and caches shared by the suites.
class VerifyContext {
 public:
  VerifyContext(Alphabets alphabets, std::vector<Lambda> lambdas, TypeId t0 = 0, unsigned seed = 20240601)
      : alphabets_(std::move(alphabets)),
        lambdas_(std::move(lambdas)),
        t0_(t0),
        seed_(seed),
        gen_(plain_enumerator(alphabets_.decorations.size(), alphabets_.types.size())) {
    alphabets_.types.check(t0_);
  }

  /// D = 1, T = 2 (red, green), λ ∈ {(1,1), (1,0), (2/3,−5)}.
  static VerifyContext standard() {
    Alphabets a{DecorationAlphabet({"a"}), TypeAlphabet({"red", "green"})};
    std::vector<Lambda> ls;
    Lambda l1 = Lambda::uniform(2, 1);
    Lambda l2 = Lambda::single(0, 1);
    Lambda l3;
    l3.set(0, Rational(2, 3));
    l3.set(1, Rational(-5));
    ls = {l1, l2, l3};
    return VerifyContext(std::move(a), std::move(ls));
  }

  const Alphabets& alphabets() const { return alphabets_; }
  const std::vector<Lambda>& lambdas() const { return lambdas_; }
  TypeId t0() const { return t0_; }
  unsigned seed() const { return seed_; }
  int num_types() const { return alphabets_.types.size(); }
  int num_decorations() const { return alphabets_.decorations.size(); }

  const std::vector<Tree>& trees(int n) { return gen_.trees(n); }
  const std::vector<Forest>& forests(int n) {
    auto it = forests_.find(n);
    if (it == forests_.end()) it = forests_.emplace(n, gen_.forests(n)).first;
    return it->second;
  }

  std::string show(const Tree& t) const { return render(t, NamedSyntax{&alphabets_}); }
  std::string show(const Forest& f) const { return render(f, NamedSyntax{&alphabets_}); }
  std::string show(const Lambda& l) const { return "lambda=" + l.render(alphabets_.types); }

 private:
  Alphabets alphabets_;
  std::vector<Lambda> lambdas_;
  TypeId t0_;
  unsigned seed_;
  TreeEnumerator<DecId> gen_;
  std::map<int, std::vector<Forest>> forests_;
};

namespace detail {

inline LinComb<Tree> tree(const Tree& t) { return LinComb<Tree>(t); }
inline LinComb<Forest> forest(const Forest& f) { return LinComb<Forest>(f); }

template <class A, class B>
LinComb<Tensor3<A, A, A>> left_then(const LinComb<Tensor2<A, A>>& x, B&& co) {
  LinComb<Tensor3<A, A, A>> out;
  for (const auto& [k, c] : x)
    for (const auto& [l, d] : co(k.first)) out.add(Tensor3<A, A, A>{l.first, l.second, k.second}, c * d);
  return out;
}

template <class A, class B>
LinComb<Tensor3<A, A, A>> right_then(const LinComb<Tensor2<A, A>>& x, B&& co) {
  LinComb<Tensor3<A, A, A>> out;
  for (const auto& [k, c] : x)
    for (const auto& [l, d] : co(k.second)) out.add(Tensor3<A, A, A>{k.first, l.first, l.second}, c * d);
  return out;
}

template <class A>
LinComb<Tensor3<A, A, A>> swap23(const LinComb<Tensor3<A, A, A>>& x) {
  LinComb<Tensor3<A, A, A>> out;
  for (const auto& [k, c] : x) out.add(Tensor3<A, A, A>{k.first, k.third, k.second}, c);
  return out;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------- prelie

inline PropertyResult check_multiple_prelie(VerifyContext& ctx, int max_size) {
  Property p("multiple pre-Lie identity");
  const int nt = ctx.num_types();
  for (int a = 1; a <= max_size; ++a)
    for (int b = 1; a + b <= max_size; ++b)
      for (int c = 1; a + b + c <= max_size; ++c)
        for (const auto& x : ctx.trees(a))
          for (const auto& y : ctx.trees(b))
            for (const auto& z : ctx.trees(c))
              for (TypeId t = 0; t < nt; ++t)
                for (TypeId tp = 0; tp < nt; ++tp) {
                  using detail::tree;
                  const auto lhs = prelie_product(tree(x), prelie_product(tree(y), tree(z), t), tp) -
                                   prelie_product(prelie_product(tree(x), tree(y), tp), tree(z), t);
                  const auto rhs = prelie_product(tree(x), prelie_product(tree(z), tree(y), tp), t) -
                                   prelie_product(prelie_product(tree(x), tree(z), t), tree(y), tp);
                  p.check(lhs == rhs, [&] {
                    return "x=" + ctx.show(x) + " y=" + ctx.show(y) + " z=" + ctx.show(z) + " t=" +
                           ctx.alphabets().types.name(t) + " t'=" + ctx.alphabets().types.name(tp);
                  });
                }
  return p.result();
}

inline PropertyResult check_nap_coassociativity(VerifyContext& ctx, int max_size) {
  Property p("NAP coassociativity-permutativity");
  const int nt = ctx.num_types();
  for (int n = 1; n <= max_size; ++n)
    for (const auto& x : ctx.trees(n))
      for (TypeId t = 0; t < nt; ++t)
        for (TypeId tp = 0; tp < nt; ++tp) {
          auto rho = [](TypeId s) { return [s](const Tree& u) { return nap_coproduct(u, s); }; };
          const auto lhs = detail::left_then(nap_coproduct(x, tp), rho(t));
          const auto rhs = detail::swap23(detail::left_then(nap_coproduct(x, t), rho(tp)));
          p.check(lhs == rhs, [&] {
            return "x=" + ctx.show(x) + " t=" + ctx.alphabets().types.name(t) + " t'=" + ctx.alphabets().types.name(tp);
          });
        }
  return p.result();
}

inline PropertyResult check_nap_compatibility(VerifyContext& ctx, int max_size) {
  Property p("NAP compatibility with grafting");
  const int nt = ctx.num_types();
  using Pair = Tensor2<Tree>;
  for (int a = 1; a <= max_size; ++a)
    for (int b = 1; a + b <= max_size; ++b)
      for (const auto& x : ctx.trees(a))
        for (const auto& y : ctx.trees(b))
          for (TypeId t = 0; t < nt; ++t)
            for (TypeId tp = 0; tp < nt; ++tp) {
              const auto lhs = nap_coproduct(prelie_product(detail::tree(x), detail::tree(y), tp), Lambda::single(t));
              LinComb<Pair> rhs;
              if (t == tp) rhs.add(Pair{x, y}, 1);
              for (const auto& [k, c] : nap_coproduct(x, t)) {
                for (const auto& [g, d] : prelie_product(k.first, y, tp)) rhs.add(Pair{g, k.second}, c * d);
                for (const auto& [g, d] : prelie_product(k.second, y, tp)) rhs.add(Pair{k.first, g}, c * d);
              }
              p.check(lhs == rhs, [&] {
                return "x=" + ctx.show(x) + " y=" + ctx.show(y) + " t=" + ctx.alphabets().types.name(t) +
                       " t'=" + ctx.alphabets().types.name(tp);
              });
            }
  return p.result();
}

/// ρ_{t0}(T) = 0 iff T has no root edge of type t0, and Υ∘ρ_{t0}(T) = α_T T
/// where Υ grafts the right factor back on the root with type t0.
inline PropertyResult check_nap_kernel(VerifyContext& ctx, int max_size) {
  Property p("NAP kernel and root regrafting");
  for (TypeId t0 = 0; t0 < ctx.num_types(); ++t0)
    for (int n = 1; n <= max_size; ++n)
      for (const auto& x : ctx.trees(n)) {
        const auto rho = nap_coproduct(x, t0);
        LinComb<Tree> regraft;
        for (const auto& [k, c] : rho) regraft.add(graft_at(k.first, {}, k.second, t0), c);
        const auto alpha = static_cast<long>(count_root_edges_of_type(x, t0));
        const bool ok = (rho.empty() == !has_root_edge_of_type(x, t0)) && regraft == Rational(alpha) * detail::tree(x);
        p.check(ok, [&] { return "x=" + ctx.show(x) + " t0=" + ctx.alphabets().types.name(t0); });
      }
  return p.result();
}

/// uv • w = sum (u • w(1))(v • w(2)) over the unshuffle coproduct of w.
inline PropertyResult check_action_derivation(VerifyContext& ctx, int max_size) {
  Property p("Guin-Oudom action on products");
  for (const auto& lambda : ctx.lambdas())
    for (int a = 1; a <= max_size; ++a)
      for (int b = 1; a + b <= max_size; ++b)
        for (int c = 0; a + b + c <= max_size; ++c)
          for (const auto& u : ctx.forests(a))
            for (const auto& v : ctx.forests(b))
              for (const auto& w : ctx.forests(c)) {
                if (u.trees.size() != 1 || v.trees.size() != 1) continue;
                const auto lhs = guin_oudom_action(u * v, w, lambda);
                LinComb<Forest> rhs;
                for (const auto& [k, kc] : unshuffle_coproduct(w))
                  rhs.add(multiply(guin_oudom_action(u, k.first, lambda), guin_oudom_action(v, k.second, lambda)), kc);
                p.check(lhs == rhs, [&] {
                  return "u=" + ctx.show(u) + " v=" + ctx.show(v) + " w=" + ctx.show(w) + " " + ctx.show(lambda);
                });
              }
  return p.result();
}

/// B_d(∏ T_i δ_{t_i}) = •d • ∏ T_i δ_{t_i}.
inline PropertyResult check_b_plus_action(VerifyContext& ctx, int max_size) {
  Property p("B_d as action on a vertex");
  for (int n = 1; n <= max_size; ++n)
    for (const auto& t : ctx.trees(n)) {
      const auto lhs = guin_oudom_action(Forest(Tree(t.dec)), DeltaWord<DecId>(t.children));
      p.check(lhs == detail::forest(Forest(b_plus(t.dec, DeltaWord<DecId>(t.children)))),
              [&] { return "T=" + ctx.show(t); });
    }
  return p.result();
}

// ---------------------------------------------------------------- hopf

inline PropertyResult check_ck_coassociativity(VerifyContext& ctx, int max_size) {
  Property p("CK coassociativity");
  for (const auto& lambda : ctx.lambdas())
    for (int n = 0; n <= max_size; ++n)
      for (const auto& f : ctx.forests(n)) {
        auto co = [&](const Forest& g) { return ck_coproduct(g, lambda); };
        const auto d = co(f);
        p.check(detail::left_then(d, co) == detail::right_then(d, co),
                [&] { return "F=" + ctx.show(f) + " " + ctx.show(lambda); });
      }
  return p.result();
}

inline PropertyResult check_ck_multiplicativity(VerifyContext& ctx, int max_size) {
  Property p("CK multiplicativity");
  for (const auto& lambda : ctx.lambdas())
    for (int a = 1; a <= max_size; ++a)
      for (int b = 1; a + b <= max_size; ++b)
        for (const auto& f : ctx.forests(a))
          for (const auto& g : ctx.forests(b)) {
            p.check(ck_coproduct(f * g, lambda) == multiply(ck_coproduct(f, lambda), ck_coproduct(g, lambda)),
                    [&] { return "F=" + ctx.show(f) + " G=" + ctx.show(g) + " " + ctx.show(lambda); });
          }
  return p.result();
}

inline PropertyResult check_antipode(VerifyContext& ctx, int max_size) {
  Property p("antipode axiom");
  for (const auto& lambda : ctx.lambdas()) {
    Antipode<DecId> s(lambda);
    for (int n = 0; n <= max_size; ++n)
      for (const auto& f : ctx.forests(n)) {
        LinComb<Forest> left, right;
        for (const auto& [k, c] : ck_coproduct(f, lambda)) {
          left.add(multiply(s(k.first), detail::forest(k.second)), c);
          right.add(multiply(detail::forest(k.first), s(k.second)), c);
        }
        const LinComb<Forest> expected = n == 0 ? unit<DecId>() : LinComb<Forest>();
        p.check(left == expected && right == expected, [&] { return "F=" + ctx.show(f) + " " + ctx.show(lambda); });
      }
  }
  return p.result();
}

inline PropertyResult check_ck_algorithms(VerifyContext& ctx, int max_size) {
  Property p("cuts and recursive CK coproducts agree");
  for (const auto& lambda : ctx.lambdas())
    for (int n = 1; n <= max_size; ++n)
      for (const auto& t : ctx.trees(n)) {
        p.check(ck_coproduct(t, lambda, CkAlgorithm::cuts) == ck_coproduct(t, lambda, CkAlgorithm::recursive),
                [&] { return "T=" + ctx.show(t) + " " + ctx.show(lambda); });
      }
  return p.result();
}

inline PropertyResult check_star_associativity(VerifyContext& ctx, int max_size) {
  Property p("star associativity and unit");
  for (const auto& lambda : ctx.lambdas()) {
    for (int n = 0; n <= max_size; ++n)
      for (const auto& f : ctx.forests(n)) {
        const auto x = detail::forest(f);
        p.check(gl_product(unit<DecId>(), x, lambda) == x && gl_product(x, unit<DecId>(), lambda) == x,
                [&] { return "unit with F=" + ctx.show(f) + " " + ctx.show(lambda); });
      }
    for (int a = 1; a <= max_size; ++a)
      for (int b = 1; a + b <= max_size; ++b)
        for (int c = 1; a + b + c <= max_size; ++c)
          for (const auto& x : ctx.forests(a))
            for (const auto& y : ctx.forests(b))
              for (const auto& z : ctx.forests(c)) {
                using detail::forest;
                const auto lhs = gl_product(gl_product(forest(x), forest(y), lambda), forest(z), lambda);
                const auto rhs = gl_product(forest(x), gl_product(forest(y), forest(z), lambda), lambda);
                p.check(lhs == rhs, [&] {
                  return "x=" + ctx.show(x) + " y=" + ctx.show(y) + " z=" + ctx.show(z) + " " + ctx.show(lambda);
                });
              }
  }
  return p.result();
}

inline PropertyResult check_star_compatibility(VerifyContext& ctx, int max_size) {
  Property p("unshuffle coproduct is a star morphism");
  using Pair = ForestPair<DecId>;
  for (const auto& lambda : ctx.lambdas())
    for (int a = 0; a <= max_size; ++a)
      for (int b = 0; a + b <= max_size; ++b)
        for (const auto& x : ctx.forests(a))
          for (const auto& y : ctx.forests(b)) {
            const auto lhs = unshuffle_coproduct(gl_product(detail::forest(x), detail::forest(y), lambda));
            LinComb<Pair> rhs;
            for (const auto& [k, c] : unshuffle_coproduct(x))
              for (const auto& [l, d] : unshuffle_coproduct(y))
                rhs.add(tensor(gl_product(k.first, l.first, lambda), gl_product(k.second, l.second, lambda)), c * d);
            p.check(lhs == rhs, [&] { return "x=" + ctx.show(x) + " y=" + ctx.show(y) + " " + ctx.show(lambda); });
          }
  return p.result();
}

// ---------------------------------------------------------------- duality

/// <x ⋆_λ y, z> = <x (x) y, Δ^{CK_λ}(z)> for |x| + |y| = |z| <= max.
inline PropertyResult check_duality(VerifyContext& ctx, int max_size) {
  Property p("star and CK coproduct are dual");
  for (const auto& lambda : ctx.lambdas())
    for (int n = 0; n <= max_size; ++n) {
      std::map<Forest, LinComb<ForestPair<DecId>>> cop;
      for (const auto& z : ctx.forests(n)) cop.emplace(z, ck_coproduct(z, lambda));
      for (int a = 0; a <= n; ++a)
        for (const auto& x : ctx.forests(a))
          for (const auto& y : ctx.forests(n - a)) {
            const auto prod = gl_product(x, y, lambda);
            const Rational sxy = Rational(symmetry_factor(x) * symmetry_factor(y));
            for (const auto& z : ctx.forests(n)) {
              const Rational lhs = prod.coefficient(z) * Rational(symmetry_factor(z));
              const Rational rhs = cop.at(z).coefficient(ForestPair<DecId>{x, y}) * sxy;
              p.check(lhs == rhs, [&] {
                return "x=" + ctx.show(x) + " y=" + ctx.show(y) + " z=" + ctx.show(z) + " " + ctx.show(lambda) +
                       ": " + to_string(lhs) + " vs " + to_string(rhs);
              });
            }
          }
    }
  return p.result();
}

// ---------------------------------------------------------------- cointeraction

inline PropertyResult check_delta_coassociativity(VerifyContext& ctx, int max_size) {
  Property p("contraction coproduct coassociativity");
  const auto& decs = ctx.alphabets().decorations;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& f : ctx.forests(n)) {
      auto co = [&](const Forest& g) { return contraction_coproduct(g, decs); };
      const auto d = co(f);
      p.check(detail::left_then(d, co) == detail::right_then(d, co), [&] { return "F=" + ctx.show(f); });
    }
  return p.result();
}

inline PropertyResult check_delta_multiplicativity(VerifyContext& ctx, int max_size) {
  Property p("contraction coproduct multiplicativity");
  const auto& decs = ctx.alphabets().decorations;
  for (int a = 1; a <= max_size; ++a)
    for (int b = 1; a + b <= max_size; ++b)
      for (const auto& f : ctx.forests(a))
        for (const auto& g : ctx.forests(b)) {
          p.check(contraction_coproduct(f * g, decs) ==
                      multiply(contraction_coproduct(f, decs), contraction_coproduct(g, decs)),
                  [&] { return "F=" + ctx.show(f) + " G=" + ctx.show(g); });
        }
  return p.result();
}

/// (Δ^{CK_λ} (x) Id)∘δ = m_{13,2,4}∘(δ (x) δ)∘Δ^{CK_λ}: apply δ to both legs of
/// Δ^{CK_λ} and multiply the two right factors.
inline PropertyResult check_cointeraction(VerifyContext& ctx, int max_size) {
  Property p("cointeraction of CK and contraction coproducts");
  const auto& decs = ctx.alphabets().decorations;
  using Triple = ForestTriple<DecId>;
  for (const auto& lambda : ctx.lambdas())
    for (int n = 1; n <= max_size; ++n)
      for (const auto& t : ctx.trees(n)) {
        const Forest f(t);
        LinComb<Triple> lhs;
        for (const auto& [k, c] : contraction_coproduct(f, decs))
          for (const auto& [l, d] : ck_coproduct(k.first, lambda)) lhs.add(Triple{l.first, l.second, k.second}, c * d);
        LinComb<Triple> rhs;
        for (const auto& [k, c] : ck_coproduct(f, lambda))
          for (const auto& [a, ca] : contraction_coproduct(k.first, decs))
            for (const auto& [b, cb] : contraction_coproduct(k.second, decs))
              rhs.add(Triple{a.first, b.first, a.second * b.second}, c * ca * cb);
        p.check(lhs == rhs, [&] { return "T=" + ctx.show(t) + " " + ctx.show(lambda); });
      }
  return p.result();
}

/// (ϖ (x) ϖ)∘δ'(T, sum of decorations) = δ(T).
inline PropertyResult check_delta_full_projection(VerifyContext& ctx, int max_size) {
  Property p("full contraction coproduct projects onto the semigroup one");
  const auto& decs = ctx.alphabets().decorations;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& t : ctx.trees(n)) {
      const FlatForest<DecId> flat(t);
      DecId s = flat.vertex(0).dec;
      for (std::size_t i = 1; i < flat.size(); ++i) s = decs.add(s, flat.vertex(static_cast<int>(i)).dec);
      LinComb<ForestPair<DecId>> projected;
      for (const auto& [k, c] : contraction_coproduct_full(PairForest({{t, s}}), decs.size()))
        projected.add(tensor(varpi(k.first, decs), varpi(k.second, decs)), c);
      p.check(projected == contraction_coproduct(Forest(t), decs), [&] { return "T=" + ctx.show(t); });
    }
  return p.result();
}

// ---------------------------------------------------------------- operad

inline PropertyResult check_operad_axioms(const TypeAlphabet& types, int max_size) {
  Property p("operad unit and associativity");
  const LabelSyntax syn{&types};
  auto show = [&](const LabeledTree& t) { return render(t, syn); };
  const int nt = types.size();
  std::vector<LabeledTree> all;
  for (int n = 1; n <= max_size; ++n)
    for (auto& t : labeled_trees(n, nt)) all.push_back(std::move(t));
  auto shift = [](const LabeledTree& t, int by) { return relabel(t, [by](int l) { return l + by; }); };
  using LC = LinComb<LabeledTree>;
  for (const auto& t : all) {
    for (int a : labels(t)) {
      const LC lhs = operad_compose(t, a, LabeledTree(a));
      p.check(lhs == LC(t), [&] { return "right unit T=" + show(t) + " a=" + std::to_string(a); });
    }
    p.check(operad_compose(LabeledTree(0), 0, t) == LC(t), [&] { return "left unit T=" + show(t); });
  }
  // S on labels 101.., U on labels 201..; compositions are cached per (T, a, S).
  std::vector<LabeledTree> ss, us;
  for (const auto& t : all) {
    ss.push_back(shift(t, 100));
    us.push_back(shift(t, 200));
  }
  std::vector<std::map<int, std::vector<LC>>> s_with_u(ss.size());  // S ∘_b U
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (int b : labels(ss[i]))
      for (const auto& u : us) s_with_u[i][b].push_back(operad_compose(ss[i], b, u));
  for (const auto& t : all) {
    const auto la = labels(t);
    std::map<int, std::vector<LC>> ts, tu;
    for (int a : la) {
      for (const auto& s : ss) ts[a].push_back(operad_compose(t, a, s));
      for (const auto& u : us) tu[a].push_back(operad_compose(t, a, u));
    }
    for (std::size_t i = 0; i < ss.size(); ++i)
      for (std::size_t j = 0; j < us.size(); ++j) {
        const auto& s = ss[i];
        const auto& u = us[j];
        for (int a1 : la) {
          // Parallel: distinct vertices of T; the equation is symmetric in (a1, S) and (a2, U).
          for (int a2 : la) {
            if (a2 <= a1) continue;
            const LC lhs = operad_compose(ts[a1][i], a2, LC(u));
            const LC rhs = operad_compose(tu[a2][j], a1, LC(s));
            p.check(lhs == rhs, [&] {
              return "parallel T=" + show(t) + " S=" + show(s) + " U=" + show(u) + " at " + std::to_string(a1) + "," +
                     std::to_string(a2);
            });
          }
          // Sequential: a vertex of S.
          for (int b : labels(s)) {
            const LC lhs = operad_compose(ts[a1][i], b, LC(u));
            const LC rhs = operad_compose(LC(t), a1, s_with_u[i][b][j]);
            p.check(lhs == rhs, [&] {
              return "sequential T=" + show(t) + " S=" + show(s) + " U=" + show(u) + " at " + std::to_string(a1) +
                     "," + std::to_string(b);
            });
          }
        }
      }
  }
  return p.result();
}

inline PropertyResult check_operad_dimensions(int max_arity, int max_types) {
  Property p("dimension of P_T(n)");
  for (int nt = 1; nt <= max_types; ++nt)
    for (int n = 1; n <= max_arity; ++n) {
      const auto count = labeled_trees(n, nt).size();
      p.check(Integer(static_cast<unsigned long>(count)) == operad_dimension(n, nt), [&] {
        return "n=" + std::to_string(n) + " T=" + std::to_string(nt) + ": generated " + std::to_string(count);
      });
    }
  return p.result();
}

inline PropertyResult check_permutative(int max_arity, int max_types) {
  Property p("free multiple permutative algebra");
  for (int nt = 1; nt <= max_types; ++nt) {
    for (int n = 1; n <= max_arity; ++n) {
      const auto words = multilinear_permutative_words(n, nt);
      const Integer expected = n * power(Integer(nt), static_cast<unsigned long>(n - 1));
      p.check(Integer(static_cast<unsigned long>(words.size())) == expected, [&] {
        return "n=" + std::to_string(n) + " T=" + std::to_string(nt) + ": " + std::to_string(words.size()) + " words";
      });
    }
    // Both relations on three sample words.
    const PermWord x(1, {}), y(2, {{4, 0}}), z(3, {});
    for (TypeId t = 0; t < nt; ++t)
      for (TypeId tp = 0; tp < nt; ++tp) {
        const auto xy_z = permutative_product(permutative_product(x, y, t), z, tp);
        p.check(xy_z == permutative_product(x, permutative_product(y, z, tp), t) &&
                    xy_z == permutative_product(permutative_product(x, z, tp), y, t),
                [&] { return "relations at t=" + std::to_string(t) + " t'=" + std::to_string(tp); });
      }
  }
  return p.result();
}

/// Composing the generator 1 -t- 2 with labeled copies of x and y gives x •_t y;
/// and the displayed quadratic relation between two generators.
inline PropertyResult check_operad_bridge(VerifyContext& ctx, int max_size) {
  Property p("operadic composition realizes the grafting products");
  const int nt = ctx.num_types();
  for (int a = 1; a <= max_size; ++a)
    for (int b = 1; a + b <= max_size; ++b)
      for (const auto& x : ctx.trees(a))
        for (const auto& y : ctx.trees(b))
          for (TypeId t = 0; t < nt; ++t) {
            p.check(operadic_prelie_product(x, y, t) == prelie_product(x, y, t), [&] {
              return "x=" + ctx.show(x) + " y=" + ctx.show(y) + " t=" + ctx.alphabets().types.name(t);
            });
          }
  // g_t ∘_1 g_s − g_s ∘_2 g_t = (g_s ∘_1 g_t − g_t ∘_2 g_s)^{(23)}.
  auto swap23 = [](const LinComb<LabeledTree>& x) {
    LinComb<LabeledTree> out;
    for (const auto& [k, c] : x) out.add(relabel(k, [](int l) { return l == 2 ? 3 : l == 3 ? 2 : l; }), c);
    return out;
  };
  for (TypeId t = 0; t < nt; ++t)
    for (TypeId s = 0; s < nt; ++s) {
      const auto g = operad_generator;
      const auto lhs = operad_compose_classical(g(t), 1, g(s)) - operad_compose_classical(g(s), 2, g(t));
      const auto rhs = swap23(operad_compose_classical(g(s), 1, g(t)) - operad_compose_classical(g(t), 2, g(s)));
      p.check(lhs == rhs, [&] { return "relation at t=" + std::to_string(t) + " t'=" + std::to_string(s); });
    }
  return p.result();
}

// ---------------------------------------------------------------- morphisms

inline PropertyResult check_phi_functoriality(VerifyContext& ctx, int max_size, int samples = 4) {
  Property p("Phi_M composes as matrices");
  std::mt19937 rng(ctx.seed());
  const auto nt = static_cast<std::size_t>(ctx.num_types());
  for (int s = 0; s < samples; ++s) {
    const Matrix m = detail::random_matrix(rng, nt), m2 = detail::random_matrix(rng, nt);
    for (int n = 0; n <= max_size; ++n)
      for (const auto& f : ctx.forests(n)) {
        const auto x = detail::forest(f);
        p.check(phi_M(phi_M(x, m2), m) == phi_M(x, m * m2), [&] { return "F=" + ctx.show(f) + " sample " + std::to_string(s); });
      }
  }
  return p.result();
}

inline PropertyResult check_phi_prelie(VerifyContext& ctx, int max_size, int samples = 3) {
  Property p("phi_M transports grafting and NAP coproducts");
  std::mt19937 rng(ctx.seed() + 1);
  const auto nt = static_cast<std::size_t>(ctx.num_types());
  for (int s = 0; s < samples; ++s) {
    const Matrix m = detail::random_matrix(rng, nt);
    for (const auto& lambda : ctx.lambdas()) {
      const Lambda ml = transform(m, lambda);
      const Lambda mtl = transform_transposed(m, lambda);
      for (int a = 1; a <= max_size; ++a) {
        for (int b = 1; a + b <= max_size; ++b)
          for (const auto& x : ctx.trees(a))
            for (const auto& y : ctx.trees(b)) {
              const auto lhs = phi_M(prelie_product(detail::tree(x), detail::tree(y), lambda), m);
              const auto rhs = prelie_product(phi_M(detail::tree(x), m), phi_M(detail::tree(y), m), ml);
              p.check(lhs == rhs, [&] { return "x=" + ctx.show(x) + " y=" + ctx.show(y) + " " + ctx.show(lambda); });
            }
        // ρ_μ∘φ_M = (φ_M (x) φ_M)∘ρ_{M^T μ}, with μ = λ.
        for (const auto& x : ctx.trees(a)) {
          const auto lhs = nap_coproduct(phi_M(detail::tree(x), m), lambda);
          LinComb<Tensor2<Tree>> rhs;
          for (const auto& [k, c] : nap_coproduct(detail::tree(x), mtl))
            rhs.add(tensor(phi_M(detail::tree(k.first), m), phi_M(detail::tree(k.second), m)), c);
          p.check(lhs == rhs, [&] { return "NAP x=" + ctx.show(x) + " mu " + ctx.show(lambda); });
        }
      }
    }
  }
  return p.result();
}

/// (Φ_M (x) Φ_M)∘Δ^{CK_{M^T λ}} = Δ^{CK_λ}∘Φ_M.
inline PropertyResult check_phi_hopf(VerifyContext& ctx, int max_size, int samples = 4) {
  Property p("Phi_M is a CK Hopf morphism");
  std::mt19937 rng(ctx.seed() + 2);
  const auto nt = static_cast<std::size_t>(ctx.num_types());
  for (int s = 0; s < samples; ++s) {
    const Matrix m = detail::random_matrix(rng, nt);
    for (const auto& lambda : ctx.lambdas()) {
      const Lambda mtl = transform_transposed(m, lambda);
      for (int n = 1; n <= max_size; ++n)
        for (const auto& t : ctx.trees(n)) {
          LinComb<ForestPair<DecId>> lhs;
          for (const auto& [k, c] : ck_coproduct(Forest(t), mtl))
            lhs.add(tensor(phi_M(detail::forest(k.first), m), phi_M(detail::forest(k.second), m)), c);
          const auto rhs = ck_coproduct(phi_M(detail::forest(Forest(t)), m), lambda);
          p.check(lhs == rhs, [&] { return "T=" + ctx.show(t) + " " + ctx.show(lambda) + " sample " + std::to_string(s); });
        }
    }
  }
  return p.result();
}

inline PropertyResult check_change_matrices(VerifyContext& ctx, int samples = 6) {
  Property p("change-of-parameter matrices");
  std::mt19937 rng(ctx.seed() + 3);
  const int nt = ctx.num_types();
  auto random_lambda = [&] {
    Lambda l;
    for (TypeId t = 0; t < nt; ++t) l.set(t, detail::random_rational(rng));
    if (l.is_zero()) l.set(0, 1);
    return l;
  };
  std::vector<std::pair<Lambda, Lambda>> pairs;
  for (const auto& l : ctx.lambdas())
    for (const auto& m : ctx.lambdas()) pairs.push_back({l, m});
  for (int s = 0; s < samples; ++s) pairs.push_back({random_lambda(), random_lambda()});
  for (const auto& [lambda, mu] : pairs) {
    const Matrix m = transport_matrix(lambda, mu, nt);
    p.check(m.inverse().has_value() && transform_transposed(m, lambda) == mu,
            [&] { return "transport " + ctx.show(lambda) + " mu " + ctx.show(mu); });
    Rational dot = 0;
    for (const auto& [t, l] : lambda.support()) dot += l * mu[t];
    if (dot == 0) continue;
    Lambda scaled = mu;  // rescale μ so that sum λ_t μ_t = 1
    for (const auto& [t, c] : mu.support()) scaled.set(t, c / dot);
    for (TypeId t0 = 0; t0 < nt; ++t0) {
      const Matrix mn = normalizing_matrix(lambda, scaled, t0, nt);
      p.check(mn.inverse().has_value() && transform(mn, Lambda::single(t0)) == lambda &&
                  transform_transposed(mn, scaled) == Lambda::single(t0),
              [&] { return "normalizing " + ctx.show(lambda) + " mu " + ctx.show(scaled); });
    }
  }
  return p.result();
}

namespace detail {

inline LinComb<Tensor2<MetaForest>> meta_coproduct(const MetaForest& f) {
  return ck_coproduct(f, Lambda::single(0));
}

}  // namespace detail

inline PropertyResult check_psi_star_morphism(VerifyContext& ctx, int max_size) {
  Property p("Psi* is an algebra and coalgebra morphism");
  const TypeId t0 = ctx.t0();
  for (const auto& lambda : ctx.lambdas()) {
    for (int a = 1; a <= max_size; ++a)
      for (int b = 1; a + b <= max_size; ++b)
        for (const auto& f : ctx.forests(a))
          for (const auto& g : ctx.forests(b)) {
            const auto lhs = psi_star(f * g, t0, lambda);
            LinComb<MetaForest> rhs;
            for (const auto& [x, cx] : psi_star(f, t0, lambda))
              for (const auto& [y, cy] : psi_star(g, t0, lambda)) rhs.add(x * y, cx * cy);
            p.check(lhs == rhs, [&] { return "product F=" + ctx.show(f) + " G=" + ctx.show(g) + " " + ctx.show(lambda); });
          }
    for (int n = 0; n <= max_size; ++n)
      for (const auto& f : ctx.forests(n)) {
        LinComb<Tensor2<MetaForest>> lhs;
        for (const auto& [k, c] : ck_coproduct(f, lambda))
          lhs.add(tensor(psi_star(k.first, t0, lambda), psi_star(k.second, t0, lambda)), c);
        LinComb<Tensor2<MetaForest>> rhs;
        for (const auto& [x, cx] : psi_star(f, t0, lambda)) rhs.add(detail::meta_coproduct(x), cx);
        p.check(lhs == rhs, [&] { return "coproduct F=" + ctx.show(f) + " " + ctx.show(lambda); });
      }
  }
  return p.result();
}

/// <Ψ(u), v> = <u, Ψ*(v)> on homogeneous basis elements.
inline PropertyResult check_psi_adjoint(VerifyContext& ctx, int max_size) {
  Property p("Psi* is the transpose of Psi");
  const TypeId t0 = ctx.t0();
  auto meta = meta_enumerator(ctx.num_decorations(), ctx.num_types(), t0, max_size);
  const MetaSyntax msyn{&ctx.alphabets()};
  for (const auto& lambda : ctx.lambdas())
    for (int n = 0; n <= max_size; ++n) {
      const auto us = meta.forests(n);
      std::vector<LinComb<Forest>> images;
      for (const auto& u : us) images.push_back(psi(LinComb<MetaForest>(u), t0, lambda));
      for (const auto& v : ctx.forests(n)) {
        const auto pv = psi_star(v, t0, lambda);
        for (std::size_t i = 0; i < us.size(); ++i) {
          const Rational lhs = pairing(images[i], detail::forest(v));
          const Rational rhs = meta_pairing(LinComb<MetaForest>(us[i]), pv);
          p.check(lhs == rhs, [&] {
            return "u=" + render(us[i], msyn) + " v=" + ctx.show(v) + " " + ctx.show(lambda) + ": " + to_string(lhs) +
                   " vs " + to_string(rhs);
          });
        }
      }
    }
  return p.result();
}

/// With λ_{t0} != 0, Ψ* is bijective in each degree; with λ_{t0} = 0 it kills
/// the t0-typed two-vertex ladder.
inline PropertyResult check_psi_star_bijective(VerifyContext& ctx, int max_size) {
  Property p("Psi* graded bijectivity and kernel witness");
  const TypeId t0 = ctx.t0();
  auto meta = meta_enumerator(ctx.num_decorations(), ctx.num_types(), t0, max_size);
  for (const auto& lambda : ctx.lambdas()) {
    if (lambda[t0] == 0) continue;
    for (int n = 0; n <= max_size; ++n) {
      const auto rows = meta.forests(n);
      const auto& cols = ctx.forests(n);
      std::map<MetaForest, std::size_t> index;
      for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
      Matrix m(rows.size(), cols.size());
      bool closed = true;
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [u, c] : psi_star(cols[j], t0, lambda)) {
          auto it = index.find(u);
          if (it == index.end()) {
            closed = false;
            continue;
          }
          m(it->second, j) = c;
        }
      p.check(closed && rows.size() == cols.size() && m.rank() == cols.size(), [&] {
        return "degree " + std::to_string(n) + " " + ctx.show(lambda) + ": " + std::to_string(rows.size()) + "x" +
               std::to_string(cols.size()) + " rank " + std::to_string(m.rank());
      });
    }
  }
  Lambda killed = Lambda::uniform(ctx.num_types(), 1);
  killed.set(t0, 0);
  for (DecId d = 0; d < ctx.num_decorations(); ++d)
    for (DecId e = 0; e < ctx.num_decorations(); ++e) {
      const Forest ladder(make_ladder(d, t0, e));
      p.check(psi_star(ladder, t0, killed).empty(), [&] { return "kernel witness " + ctx.show(ladder); });
    }
  return p.result();
}

// ---------------------------------------------------------------- suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"prelie", "hopf", "duality", "operad", "morphisms", "cointeraction"};
  return names;
}

/// Runs the named suite (or "all"); `max_size` bounds the instance size.
inline std::vector<PropertyResult> run_suite(const std::string& suite, VerifyContext& ctx, int max_size) {
  std::vector<PropertyResult> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  bool known = suite == "all";
  for (const auto& s : suite_names()) known = known || s == suite;
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (want("prelie")) {
    out.push_back(check_multiple_prelie(ctx, max_size));
    out.push_back(check_nap_coassociativity(ctx, max_size));
    out.push_back(check_nap_compatibility(ctx, max_size));
    out.push_back(check_nap_kernel(ctx, max_size));
    out.push_back(check_action_derivation(ctx, max_size));
    out.push_back(check_b_plus_action(ctx, max_size));
  }
  if (want("hopf")) {
    out.push_back(check_ck_coassociativity(ctx, max_size));
    out.push_back(check_ck_multiplicativity(ctx, max_size));
    out.push_back(check_antipode(ctx, max_size));
    out.push_back(check_ck_algorithms(ctx, max_size));
    out.push_back(check_star_associativity(ctx, max_size));
    out.push_back(check_star_compatibility(ctx, max_size));
  }
  if (want("duality")) out.push_back(check_duality(ctx, max_size));
  if (want("operad")) {
    out.push_back(check_operad_axioms(ctx.alphabets().types, std::min(max_size, 3)));
    out.push_back(check_operad_dimensions(5, 2));
    out.push_back(check_permutative(4, 2));
    out.push_back(check_operad_bridge(ctx, max_size));
  }
  if (want("morphisms")) {
    out.push_back(check_phi_functoriality(ctx, max_size));
    out.push_back(check_phi_prelie(ctx, max_size));
    out.push_back(check_phi_hopf(ctx, max_size));
    out.push_back(check_change_matrices(ctx));
    out.push_back(check_psi_star_morphism(ctx, max_size));
    out.push_back(check_psi_adjoint(ctx, max_size));
    out.push_back(check_psi_star_bijective(ctx, max_size));
  }
  if (want("cointeraction")) {
    out.push_back(check_delta_coassociativity(ctx, max_size));
    out.push_back(check_delta_multiplicativity(ctx, max_size));
    out.push_back(check_cointeraction(ctx, max_size));
    out.push_back(check_delta_full_projection(ctx, max_size));
  }
  return out;
}

}  // namespace typedtrees
