#pragma once

// Grafting products, NAP coproducts, the Guin-Oudom action and the universal
// morphism out of the free multiple pre-Lie algebra.

#include "typedtrees/lincomb.hpp"
#include "typedtrees/tree.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace typedtrees {

/// Grafts `s` onto the vertex at `v` with a new edge of type `ty`.
template <class Dec>
BasicTree<Dec> graft_at(const BasicTree<Dec>& t, const Address& v, const BasicTree<Dec>& s, TypeId ty,
                        std::size_t depth = 0) {
  BasicTree<Dec> r = t;
  if (depth == v.size()) {
    r.children.push_back({ty, s});
  } else {
    const int i = v[depth];
    if (i < 0 || static_cast<std::size_t>(i) >= t.children.size()) throw std::out_of_range("invalid vertex address");
    r.children[static_cast<std::size_t>(i)].tree = graft_at(t.children[static_cast<std::size_t>(i)].tree, v, s, ty, depth + 1);
  }
  sort_children(r);
  return r;
}

/// All graftings of `s` onto `t` with edge type `ty`, one per vertex of `t`
/// (equal results repeated).
template <class Dec>
std::vector<BasicTree<Dec>> graftings(const BasicTree<Dec>& t, const BasicTree<Dec>& s, TypeId ty) {
  std::vector<BasicTree<Dec>> out;
  BasicTree<Dec> root = t;
  root.children.push_back({ty, s});
  sort_children(root);
  out.push_back(std::move(root));
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    for (auto& sub : graftings(t.children[i].tree, s, ty)) {
      BasicTree<Dec> r = t;
      r.children[i].tree = std::move(sub);
      sort_children(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

/// T •_t T' = sum over v in V(T) of T grafted with T' at v.
template <class Dec>
LinComb<BasicTree<Dec>> prelie_product(const BasicTree<Dec>& x, const BasicTree<Dec>& y, TypeId ty) {
  LinComb<BasicTree<Dec>> out;
  for (auto& g : graftings(x, y, ty)) out.add(std::move(g), 1);
  return out;
}

/// •_lambda = sum_t lambda_t •_t, extended bilinearly.
template <class Dec>
LinComb<BasicTree<Dec>> prelie_product(const LinComb<BasicTree<Dec>>& x, const LinComb<BasicTree<Dec>>& y,
                                       const Lambda& w) {
  LinComb<BasicTree<Dec>> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [t, lt] : w.support()) out.add(prelie_product(a, b, t), ca * cb * lt);
  return out;
}

template <class Dec>
LinComb<BasicTree<Dec>> prelie_product(const LinComb<BasicTree<Dec>>& x, const LinComb<BasicTree<Dec>>& y, TypeId ty) {
  return prelie_product(x, y, Lambda::single(ty));
}

/// rho_mu(B_d(prod T_i δ_{t_i})) = sum_j mu_{t_j} B_d(prod_{i != j} T_i δ_{t_i}) (x) T_j.
/// With mu = e_t this is rho_t.
template <class Dec>
LinComb<Tensor2<BasicTree<Dec>>> nap_coproduct(const LinComb<BasicTree<Dec>>& x, const Lambda& mu) {
  LinComb<Tensor2<BasicTree<Dec>>> out;
  for (const auto& [t, c] : x) {
    for (std::size_t j = 0; j < t.children.size(); ++j) {
      const Rational w = mu[t.children[j].type];
      if (w == 0) continue;
      BasicTree<Dec> rest = t;
      rest.children.erase(rest.children.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(Tensor2<BasicTree<Dec>>{std::move(rest), t.children[j].tree}, c * w);
    }
  }
  return out;
}

template <class Dec>
LinComb<Tensor2<BasicTree<Dec>>> nap_coproduct(const BasicTree<Dec>& t, TypeId ty) {
  return nap_coproduct(LinComb<BasicTree<Dec>>(t), Lambda::single(ty));
}

/// Monomial (T_1 δ_{t_1})...(T_k δ_{t_k}) of S(V^{⊕T}), factors sorted.
template <class Dec>
struct DeltaWord {
  std::vector<BasicBranch<Dec>> factors;

  DeltaWord() = default;
  explicit DeltaWord(std::vector<BasicBranch<Dec>> fs) : factors(std::move(fs)) {
    std::sort(factors.begin(), factors.end());
  }

  bool empty() const { return factors.empty(); }
  friend auto operator<=>(const DeltaWord& a, const DeltaWord& b) { return a.factors <=> b.factors; }
  friend bool operator==(const DeltaWord& a, const DeltaWord& b) = default;
};

/// B_d: grafts the word's trees on a common root decorated by d.
template <class Dec>
BasicTree<Dec> b_plus(Dec d, const DeltaWord<Dec>& w) {
  return BasicTree<Dec>(std::move(d), w.factors);  // factors already in canonical order
}

namespace detail {

// Enumerates every way of attaching the given branches to original vertices of
// `f`: emit(forest, weight) once per assignment.
template <class Dec, class Emit>
void attach_all(const BasicForest<Dec>& f, const std::vector<std::vector<std::pair<BasicBranch<Dec>, Rational>>>& choices,
                Emit&& emit) {
  const FlatForest<Dec> flat(f);
  const std::size_t nv = flat.size();
  if (nv == 0) {
    if (choices.empty()) emit(f, Rational(1));
    return;
  }
  std::vector<std::vector<BasicBranch<Dec>>> extra(nv);
  auto rec = [&](auto&& self, std::size_t i, const Rational& w) -> void {
    if (i == choices.size()) {
      std::vector<BasicTree<Dec>> trees;
      trees.reserve(flat.roots().size());
      for (int r : flat.roots()) trees.push_back(flat.rebuild(r, [](int) { return true; }, &extra));
      emit(BasicForest<Dec>(std::move(trees)), w);
      return;
    }
    for (std::size_t v = 0; v < nv; ++v) {
      for (const auto& [branch, c] : choices[i]) {
        extra[v].push_back(branch);
        self(self, i + 1, w * c);
        extra[v].pop_back();
      }
    }
  };
  rec(rec, 0, Rational(1));
}

}  // namespace detail

/// F • (T_1 δ_{t_1} ... T_k δ_{t_k}): graft every factor onto some vertex of F,
/// summing over all assignments. 1 • W = ε(W).
template <class Dec>
LinComb<BasicForest<Dec>> guin_oudom_action(const BasicForest<Dec>& f, const DeltaWord<Dec>& w) {
  std::vector<std::vector<std::pair<BasicBranch<Dec>, Rational>>> choices;
  for (const auto& b : w.factors) choices.push_back({{b, Rational(1)}});
  LinComb<BasicForest<Dec>> out;
  detail::attach_all(f, choices, [&](BasicForest<Dec> g, const Rational& c) { out.add(std::move(g), c); });
  return out;
}

template <class Dec>
LinComb<BasicForest<Dec>> guin_oudom_action(const LinComb<BasicForest<Dec>>& f, const LinComb<DeltaWord<Dec>>& w) {
  LinComb<BasicForest<Dec>> out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : w) out.add(guin_oudom_action(a, b), ca * cb);
  return out;
}

/// F •_λ T_1...T_n: every tree of the forest word is grafted onto a vertex of
/// F with every type t, weighted by λ_t.
template <class Dec>
LinComb<BasicForest<Dec>> guin_oudom_action(const BasicForest<Dec>& f, const BasicForest<Dec>& w, const Lambda& lambda) {
  std::vector<std::vector<std::pair<BasicBranch<Dec>, Rational>>> choices;
  for (const auto& t : w.trees) {
    std::vector<std::pair<BasicBranch<Dec>, Rational>> opts;
    for (const auto& [ty, l] : lambda.support()) opts.push_back({BasicBranch<Dec>{ty, t}, l});
    choices.push_back(std::move(opts));
  }
  LinComb<BasicForest<Dec>> out;
  detail::attach_all(f, choices, [&](BasicForest<Dec> g, const Rational& c) { out.add(std::move(g), c); });
  return out;
}

template <class Dec>
LinComb<BasicForest<Dec>> guin_oudom_action(const LinComb<BasicForest<Dec>>& f, const LinComb<BasicForest<Dec>>& w,
                                            const Lambda& lambda) {
  LinComb<BasicForest<Dec>> out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : w) out.add(guin_oudom_action(a, b, lambda), ca * cb);
  return out;
}

/// Evaluation context for the free pre-Lie algebra itself: the product of
/// type t is •_t, or •_λ for every t when a λ is fixed.
template <class Dec>
struct TreeAlgebra {
  using value_type = LinComb<BasicTree<Dec>>;
  std::optional<Lambda> lambda;

  value_type zero() const { return {}; }
  void add(value_type& acc, const value_type& x, const Rational& c) const { acc.add(x, c); }
  value_type product(const value_type& a, const value_type& b, TypeId t) const {
    return lambda ? prelie_product(a, b, *lambda) : prelie_product(a, b, t);
  }
};

namespace detail {

// a • (y_1 δ_{t_1} ... y_k δ_{t_k}) in the target algebra, by
//   a • w(y δ_t) = (a • w) •_t y − a • (w •_t y).
template <class Ctx>
typename Ctx::value_type act(const Ctx& ctx, const typename Ctx::value_type& a,
                             const std::vector<std::pair<typename Ctx::value_type, TypeId>>& word) {
  if (word.empty()) return a;
  auto w = word;
  const auto [y, t] = w.back();
  w.pop_back();
  auto result = ctx.product(act(ctx, a, w), y, t);
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto wi = w;
    wi[i].first = ctx.product(w[i].first, y, t);
    ctx.add(result, act(ctx, a, wi), Rational(-1));
  }
  return result;
}

}  // namespace detail

/// The unique multiple pre-Lie morphism from trees sending •d to images(d):
/// φ(B_d(∏ T_i δ_{t_i})) = images(d) • ∏ φ(T_i) δ_{t_i}.
template <class Ctx, class Dec, class Images>
typename Ctx::value_type universal_morphism(const BasicTree<Dec>& t, Images&& images, const Ctx& ctx) {
  std::vector<std::pair<typename Ctx::value_type, TypeId>> word;
  word.reserve(t.children.size());
  for (const auto& b : t.children) word.push_back({universal_morphism(b.tree, images, ctx), b.type});
  return detail::act(ctx, images(t.dec), word);
}

template <class Ctx, class Dec, class Images>
typename Ctx::value_type universal_morphism(const LinComb<BasicTree<Dec>>& x, Images&& images, const Ctx& ctx) {
  auto out = ctx.zero();
  for (const auto& [t, c] : x) ctx.add(out, universal_morphism(t, images, ctx), c);
  return out;
}

}  // namespace typedtrees
