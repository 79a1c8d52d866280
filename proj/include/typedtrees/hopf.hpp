#pragma once

// The Grossman-Larson and Connes-Kreimer Hopf algebras on forests, their
// pairing, the antipode and the contraction coproduct.

#include "typedtrees/alphabet.hpp"
#include "typedtrees/cuts.hpp"
#include "typedtrees/lincomb.hpp"
#include "typedtrees/prelie.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace typedtrees {

template <class Dec>
using ForestPair = Tensor2<BasicForest<Dec>>;
template <class Dec>
using ForestTriple = Tensor3<BasicForest<Dec>>;

/// Disjoint-union product, bilinear.
template <class Dec>
LinComb<BasicForest<Dec>> multiply(const LinComb<BasicForest<Dec>>& x, const LinComb<BasicForest<Dec>>& y) {
  LinComb<BasicForest<Dec>> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(a * b, ca * cb);
  return out;
}

/// Factorwise product in H (x) H.
template <class Dec>
LinComb<ForestPair<Dec>> multiply(const LinComb<ForestPair<Dec>>& x, const LinComb<ForestPair<Dec>>& y) {
  LinComb<ForestPair<Dec>> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(ForestPair<Dec>{a.first * b.first, a.second * b.second}, ca * cb);
  return out;
}

template <class Dec>
LinComb<BasicForest<Dec>> unit() {
  return LinComb<BasicForest<Dec>>(BasicForest<Dec>{});
}

/// ε(F) = 1 for the empty forest, 0 otherwise.
template <class Dec>
Rational counit(const LinComb<BasicForest<Dec>>& x) {
  return x.coefficient(BasicForest<Dec>{});
}

/// Δ(T_1...T_n) = sum over I of prod_I T_i (x) prod_{not I} T_i.
template <class Dec>
LinComb<ForestPair<Dec>> unshuffle_coproduct(const BasicForest<Dec>& f) {
  LinComb<ForestPair<Dec>> out;
  const std::size_t n = f.trees.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<BasicTree<Dec>> in, rest;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? in : rest).push_back(f.trees[i]);
    out.add(ForestPair<Dec>{BasicForest<Dec>(std::move(in)), BasicForest<Dec>(std::move(rest))}, 1);
  }
  return out;
}

template <class Dec>
LinComb<ForestPair<Dec>> unshuffle_coproduct(const LinComb<BasicForest<Dec>>& x) {
  LinComb<ForestPair<Dec>> out;
  for (const auto& [f, c] : x) out.add(unshuffle_coproduct(f), c);
  return out;
}

/// F ⋆_λ T_1...T_n = sum over I of (F •_λ prod_I T_i) prod_{not I} T_i.
template <class Dec>
LinComb<BasicForest<Dec>> gl_product(const BasicForest<Dec>& f, const BasicForest<Dec>& g, const Lambda& lambda) {
  LinComb<BasicForest<Dec>> out;
  for (const auto& [split, c] : unshuffle_coproduct(g)) {
    for (const auto& [h, ch] : guin_oudom_action(f, split.first, lambda)) out.add(h * split.second, c * ch);
  }
  return out;
}

template <class Dec>
LinComb<BasicForest<Dec>> gl_product(const LinComb<BasicForest<Dec>>& x, const LinComb<BasicForest<Dec>>& y,
                                     const Lambda& lambda) {
  LinComb<BasicForest<Dec>> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(gl_product(a, b, lambda), ca * cb);
  return out;
}

enum class CkAlgorithm { cuts, recursive };

namespace detail {

template <class Dec>
Rational cut_weight(const std::vector<TypeId>& types, const Lambda& lambda) {
  Rational w = 1;
  for (TypeId t : types) w *= lambda[t];
  return w;
}

// Δ(T) − 1 (x) T via admissible cuts.
template <class Dec>
LinComb<ForestPair<Dec>> reduced_ck_cuts(const BasicTree<Dec>& t, const Lambda& lambda) {
  LinComb<ForestPair<Dec>> out;
  out.add(ForestPair<Dec>{BasicForest<Dec>(t), BasicForest<Dec>{}}, 1);
  for (const auto& c : admissible_cuts(t)) {
    const Rational w = cut_weight<Dec>(c.types, lambda);
    if (w != 0) out.add(ForestPair<Dec>{BasicForest<Dec>(c.root_part), c.pruned}, w);
  }
  return out;
}

// Δ(T) − 1 (x) T by the recursion
//   (B_d (x) Id)(prod_i (Δ̄(T_i) δ_{t_i} + λ_{t_i} 1 (x) T_i)).
template <class Dec>
LinComb<ForestPair<Dec>> reduced_ck_recursive(const BasicTree<Dec>& t, const Lambda& lambda) {
  using Key = Tensor2<DeltaWord<Dec>, BasicForest<Dec>>;
  LinComb<Key> acc(Key{DeltaWord<Dec>{}, BasicForest<Dec>{}});
  for (const auto& br : t.children) {
    LinComb<Key> factor;
    for (const auto& [k, c] : reduced_ck_recursive(br.tree, lambda)) {
      // Left factors of Δ̄ are single trees.
      factor.add(Key{DeltaWord<Dec>({BasicBranch<Dec>{br.type, k.first.trees.front()}}), k.second}, c);
    }
    factor.add(Key{DeltaWord<Dec>{}, BasicForest<Dec>(br.tree)}, lambda[br.type]);
    LinComb<Key> next;
    for (const auto& [a, ca] : acc) {
      for (const auto& [b, cb] : factor) {
        std::vector<BasicBranch<Dec>> word = a.first.factors;
        word.insert(word.end(), b.first.factors.begin(), b.first.factors.end());
        next.add(Key{DeltaWord<Dec>(std::move(word)), a.second * b.second}, ca * cb);
      }
    }
    acc = std::move(next);
  }
  LinComb<ForestPair<Dec>> out;
  for (const auto& [k, c] : acc) out.add(ForestPair<Dec>{BasicForest<Dec>(b_plus(t.dec, k.first)), k.second}, c);
  return out;
}

}  // namespace detail

/// Δ^{CK_λ}(T) = T (x) 1 + 1 (x) T + sum over admissible cuts of
/// (prod λ_{type(e)}) R^c (x) P^c, extended multiplicatively to forests.
template <class Dec>
LinComb<ForestPair<Dec>> ck_coproduct(const BasicTree<Dec>& t, const Lambda& lambda,
                                      CkAlgorithm algorithm = CkAlgorithm::cuts) {
  auto out = algorithm == CkAlgorithm::cuts ? detail::reduced_ck_cuts(t, lambda) : detail::reduced_ck_recursive(t, lambda);
  out.add(ForestPair<Dec>{BasicForest<Dec>{}, BasicForest<Dec>(t)}, 1);
  return out;
}

template <class Dec>
LinComb<ForestPair<Dec>> ck_coproduct(const BasicForest<Dec>& f, const Lambda& lambda,
                                      CkAlgorithm algorithm = CkAlgorithm::cuts) {
  LinComb<ForestPair<Dec>> out(ForestPair<Dec>{BasicForest<Dec>{}, BasicForest<Dec>{}});
  for (const auto& t : f.trees) out = multiply(out, ck_coproduct(t, lambda, algorithm));
  return out;
}

template <class Dec>
LinComb<ForestPair<Dec>> ck_coproduct(const LinComb<BasicForest<Dec>>& x, const Lambda& lambda,
                                      CkAlgorithm algorithm = CkAlgorithm::cuts) {
  LinComb<ForestPair<Dec>> out;
  for (const auto& [f, c] : x) out.add(ck_coproduct(f, lambda, algorithm), c);
  return out;
}

/// Graded recursion S(T) = −T − sum_c (prod λ) S(R^c) P^c, multiplicative.
template <class Dec>
class Antipode {
 public:
  explicit Antipode(Lambda lambda) : lambda_(std::move(lambda)) {}

  const LinComb<BasicForest<Dec>>& operator()(const BasicTree<Dec>& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    LinComb<BasicForest<Dec>> s(BasicForest<Dec>(t), -1);
    for (const auto& c : admissible_cuts(t)) {
      const Rational w = detail::cut_weight<Dec>(c.types, lambda_);
      if (w == 0) continue;
      s.add(multiply((*this)(c.root_part), LinComb<BasicForest<Dec>>(c.pruned)), -w);
    }
    return memo_.emplace(t, std::move(s)).first->second;
  }

  LinComb<BasicForest<Dec>> operator()(const BasicForest<Dec>& f) {
    LinComb<BasicForest<Dec>> out = unit<Dec>();
    for (const auto& t : f.trees) out = multiply(out, (*this)(t));
    return out;
  }

  LinComb<BasicForest<Dec>> operator()(const LinComb<BasicForest<Dec>>& x) {
    LinComb<BasicForest<Dec>> out;
    for (const auto& [f, c] : x) out.add((*this)(f), c);
    return out;
  }

 private:
  Lambda lambda_;
  std::map<BasicTree<Dec>, LinComb<BasicForest<Dec>>> memo_;
};

template <class Dec>
LinComb<BasicForest<Dec>> antipode(const LinComb<BasicForest<Dec>>& x, const Lambda& lambda) {
  return Antipode<Dec>(lambda)(x);
}

/// <F, F'> = δ_{F,F'} s_F, bilinear.
template <class Dec>
Rational pairing(const LinComb<BasicForest<Dec>>& x, const LinComb<BasicForest<Dec>>& y) {
  Rational r = 0;
  for (const auto& [f, c] : x) {
    const Rational d = y.coefficient(f);
    if (d != 0) r += c * d * Rational(symmetry_factor(f));
  }
  return r;
}

/// <x (x) y, z (x) w> = <x,z><y,w>, bilinear.
template <class Dec>
Rational pairing(const LinComb<ForestPair<Dec>>& x, const LinComb<ForestPair<Dec>>& y) {
  Rational r = 0;
  for (const auto& [k, c] : x) {
    const Rational d = y.coefficient(k);
    if (d != 0) r += c * d * Rational(symmetry_factor(k.first) * symmetry_factor(k.second));
  }
  return r;
}

// Contraction coproduct.

namespace detail {

template <class Dec>
BasicTree<Dec> relabel_skeleton(const BasicTree<int>& s, const std::vector<Dec>& block_dec) {
  BasicTree<Dec> t(block_dec[static_cast<std::size_t>(s.dec)]);
  for (const auto& b : s.children) t.children.push_back({b.type, relabel_skeleton(b.tree, block_dec)});
  sort_children(t);
  return t;
}

template <class Dec>
BasicForest<Dec> contract(const ConnectedPartition<Dec>& p, const std::vector<Dec>& block_dec) {
  std::vector<BasicTree<Dec>> trees;
  for (const auto& s : p.skeleton) trees.push_back(relabel_skeleton(s, block_dec));
  return BasicForest<Dec>(std::move(trees));
}

}  // namespace detail

/// δ(F) = sum over partitions of F into connected blocks of F/P (x) prod blocks,
/// each contracted vertex decorated by the semigroup sum of its block.
inline LinComb<ForestPair<DecId>> contraction_coproduct(const Forest& f, const DecorationAlphabet& decorations) {
  if (!decorations.has_semigroup()) throw AlphabetError("contraction coproduct needs a semigroup law on decorations");
  LinComb<ForestPair<DecId>> out;
  const FlatForest<DecId> flat(f);
  for (const auto& p : connected_partitions(f)) {
    std::vector<DecId> sums;
    for (const auto& block : p.members) {
      DecId s = flat.vertex(block.front()).dec;
      for (std::size_t i = 1; i < block.size(); ++i) s = decorations.add(s, flat.vertex(block[i]).dec);
      sums.push_back(s);
    }
    out.add(ForestPair<DecId>{detail::contract(p, sums), Forest(p.blocks)}, 1);
  }
  return out;
}

inline LinComb<ForestPair<DecId>> contraction_coproduct(const LinComb<Forest>& x, const DecorationAlphabet& decorations) {
  LinComb<ForestPair<DecId>> out;
  for (const auto& [f, c] : x) out.add(contraction_coproduct(f, decorations), c);
  return out;
}

/// Monomial of H': a multiset of (tree, decoration) generators.
struct PairForest {
  std::vector<std::pair<Tree, DecId>> factors;

  PairForest() = default;
  explicit PairForest(std::vector<std::pair<Tree, DecId>> fs) : factors(std::move(fs)) {
    std::sort(factors.begin(), factors.end());
  }
  friend auto operator<=>(const PairForest& a, const PairForest& b) { return a.factors <=> b.factors; }
  friend bool operator==(const PairForest& a, const PairForest& b) = default;
  friend PairForest operator*(const PairForest& a, const PairForest& b) {
    std::vector<std::pair<Tree, DecId>> fs = a.factors;
    fs.insert(fs.end(), b.factors.begin(), b.factors.end());
    return PairForest(std::move(fs));
  }
};

/// δ(T, d) = sum over partitions and re-decorations dec of the contracted
/// tree ((T/P, dec), d) (x) prod_i (T_i, dec(i)); multiplicative on H'.
inline LinComb<Tensor2<PairForest>> contraction_coproduct_full(const PairForest& x, int num_decorations) {
  LinComb<Tensor2<PairForest>> out(Tensor2<PairForest>{PairForest{}, PairForest{}});
  for (const auto& [tree, d] : x.factors) {
    LinComb<Tensor2<PairForest>> one;
    for (const auto& p : connected_partitions(tree)) {
      const std::size_t k = p.blocks.size();
      std::vector<DecId> dec(k, 0);
      for (;;) {
        const Forest contracted = detail::contract(p, dec);
        std::vector<std::pair<Tree, DecId>> right;
        for (std::size_t i = 0; i < k; ++i) right.push_back({p.blocks[i], dec[i]});
        one.add(Tensor2<PairForest>{PairForest({{contracted.trees.front(), d}}), PairForest(std::move(right))}, 1);
        std::size_t i = 0;
        while (i < k && ++dec[i] == num_decorations) dec[i++] = 0;
        if (i == k) break;
      }
    }
    LinComb<Tensor2<PairForest>> next;
    for (const auto& [a, ca] : out)
      for (const auto& [b, cb] : one) next.add(Tensor2<PairForest>{a.first * b.first, a.second * b.second}, ca * cb);
    out = std::move(next);
  }
  return out;
}

/// ϖ(T, d) = T when d is the sum of the decorations of T, 0 otherwise.
inline LinComb<Forest> varpi(const PairForest& x, const DecorationAlphabet& decorations) {
  std::vector<Tree> trees;
  for (const auto& [t, d] : x.factors) {
    const FlatForest<DecId> flat(t);
    DecId s = flat.vertex(0).dec;
    for (std::size_t i = 1; i < flat.size(); ++i) s = decorations.add(s, flat.vertex(static_cast<int>(i)).dec);
    if (s != d) return {};
    trees.push_back(t);
  }
  return LinComb<Forest>(Forest(std::move(trees)));
}

}  // namespace typedtrees
