#pragma once

// Edge-type substitution Φ_M, the freeness morphisms Ψ_{t0} and Ψ*_{t0}, and
// explicit change-of-parameter matrices.

#include "typedtrees/cuts.hpp"
#include "typedtrees/generate.hpp"
#include "typedtrees/hopf.hpp"
#include "typedtrees/literal.hpp"
#include "typedtrees/matrix.hpp"
#include "typedtrees/prelie.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace typedtrees {

/// m(t, t'): rows are target types, columns source types.
using TypeMatrix = Matrix;

namespace detail {

inline std::vector<std::pair<Tree, Rational>> phi_tree(const Tree& t, const TypeMatrix& m) {
  std::vector<std::pair<Tree, Rational>> acc{{Tree(t.dec), Rational(1)}};
  for (const auto& br : t.children) {
    const auto below = phi_tree(br.tree, m);
    std::vector<std::pair<Tree, Rational>> next;
    for (std::size_t ty = 0; ty < m.rows(); ++ty) {
      const Rational& w = m(ty, static_cast<std::size_t>(br.type));
      if (w == 0) continue;
      for (const auto& [a, ca] : acc) {
        for (const auto& [b, cb] : below) {
          Tree r = a;
          r.children.push_back({static_cast<TypeId>(ty), b});
          next.push_back({std::move(r), ca * cb * w});
        }
      }
    }
    acc = std::move(next);
  }
  for (auto& [r, c] : acc) sort_children(r);
  return acc;
}

}  // namespace detail

/// Replaces each edge type t' by sum_t m(t, t') t, multilinearly in the edges.
inline LinComb<Forest> phi_M(const LinComb<Forest>& x, const TypeMatrix& m) {
  LinComb<Forest> out;
  for (const auto& [f, c] : x) {
    LinComb<Forest> prod = unit<DecId>();
    for (const auto& t : f.trees) {
      if (t.children.empty()) {
        prod = multiply(prod, LinComb<Forest>(Forest(t)));
        continue;
      }
      LinComb<Forest> image;
      for (auto& [r, w] : detail::phi_tree(t, m)) image.add(Forest(std::move(r)), w);
      prod = multiply(prod, image);
    }
    out.add(prod, c);
  }
  return out;
}

inline LinComb<Tree> phi_M(const LinComb<Tree>& x, const TypeMatrix& m) {
  LinComb<Tree> out;
  for (const auto& [t, c] : x)
    for (auto& [r, w] : detail::phi_tree(t, m)) out.add(std::move(r), c * w);
  return out;
}

/// M λ as a type vector.
inline Lambda transform(const TypeMatrix& m, const Lambda& lambda) {
  Lambda out;
  for (std::size_t t = 0; t < m.rows(); ++t) {
    Rational s = 0;
    for (const auto& [tp, l] : lambda.support()) s += m(t, static_cast<std::size_t>(tp)) * l;
    out.set(static_cast<TypeId>(t), s);
  }
  return out;
}

/// M^T μ as a type vector.
inline Lambda transform_transposed(const TypeMatrix& m, const Lambda& mu) { return transform(m.transpose(), mu); }

// Trees decorated by restricted trees, with a single untyped edge kind.

using MetaTree = BasicTree<Tree>;
using MetaForest = BasicForest<Tree>;

/// Decorations spelled `{tree}`, the single edge type spelled `_`.
struct MetaSyntax {
  using dec_type = Tree;
  const Alphabets* alphabets;

  Tree parse_dec(Cursor& in) const {
    in.expect('{');
    Tree t = parse_tree(in, NamedSyntax{alphabets});
    in.expect('}');
    return t;
  }
  std::string dec_name(const Tree& t) const { return "{" + render(t, NamedSyntax{alphabets}) + "}"; }
  TypeId parse_type(Cursor& in) const {
    const std::size_t at = in.position();
    if (in.identifier() != "_") in.fail_at(at, "expected '_'");
    return 0;
  }
  std::string type_name(TypeId) const { return "_"; }
};

inline void check_restricted(const MetaTree& x, TypeId t0) {
  if (has_root_edge_of_type(x.dec, t0)) throw std::invalid_argument("decoration is not a restricted tree");
  for (const auto& b : x.children) check_restricted(b.tree, t0);
}

/// ψ_{t0}: the pre-Lie morphism from trees decorated by restricted trees to
/// (trees, •_λ) sending the one-vertex tree {T} to T.
inline LinComb<Tree> psi(const LinComb<MetaTree>& x, TypeId t0, const Lambda& lambda) {
  for (const auto& [t, c] : x) check_restricted(t, t0);
  TreeAlgebra<DecId> target{lambda};
  return universal_morphism(x, [](const Tree& d) { return LinComb<Tree>(d); }, target);
}

/// Ψ_{t0}: ψ_{t0} extended multiplicatively to forests.
inline LinComb<Forest> psi(const LinComb<MetaForest>& x, TypeId t0, const Lambda& lambda) {
  LinComb<Forest> out;
  for (const auto& [f, c] : x) {
    LinComb<Forest> prod = unit<DecId>();
    for (const auto& t : f.trees) {
      LinComb<Forest> image;
      for (const auto& [r, w] : psi(LinComb<MetaTree>(t), t0, lambda)) image.add(Forest(r), w);
      prod = multiply(prod, image);
    }
    out.add(prod, c);
  }
  return out;
}

namespace detail {

inline MetaTree meta_skeleton(const BasicTree<int>& s, const std::vector<Tree>& blocks) {
  MetaTree t(blocks[static_cast<std::size_t>(s.dec)]);
  for (const auto& b : s.children) t.children.push_back({0, meta_skeleton(b.tree, blocks)});
  sort_children(t);
  return t;
}

}  // namespace detail

/// Ψ*_{t0}(F) = sum over partitions of F into connected blocks lying in
/// T^{(t0)} of (prod of λ over the edges between blocks) times the contracted
/// forest, untyped, each vertex decorated by its block.
inline LinComb<MetaForest> psi_star(const Forest& f, TypeId t0, const Lambda& lambda) {
  LinComb<MetaForest> out;
  for (const auto& p : connected_partitions(f, t0)) {
    const Rational w = detail::cut_weight<DecId>(p.crossing_types, lambda);
    if (w == 0) continue;
    std::vector<MetaTree> trees;
    for (const auto& s : p.skeleton) trees.push_back(detail::meta_skeleton(s, p.blocks));
    out.add(MetaForest(std::move(trees)), w);
  }
  return out;
}

inline LinComb<MetaForest> psi_star(const LinComb<Forest>& x, TypeId t0, const Lambda& lambda) {
  LinComb<MetaForest> out;
  for (const auto& [f, c] : x) out.add(psi_star(f, t0, lambda), c);
  return out;
}

/// Weight of the meta forest u in the pairing for which Ψ*_{t0} is the
/// transpose of Ψ_{t0}: s_u times s_T for every vertex decorated by T.
inline Integer meta_symmetry_factor(const MetaForest& u) {
  Integer s = symmetry_factor(u);
  const FlatForest<Tree> flat(u);
  for (std::size_t i = 0; i < flat.size(); ++i) s *= symmetry_factor(flat.vertex(static_cast<int>(i)).dec);
  return s;
}

inline Rational meta_pairing(const LinComb<MetaForest>& x, const LinComb<MetaForest>& y) {
  Rational out = 0;
  for (const auto& [u, c] : x) out += c * y.coefficient(u) * Rational(meta_symmetry_factor(u));
  return out;
}

/// Enumerates meta forests whose decorations total n underlying vertices.
inline TreeEnumerator<Tree> meta_enumerator(int num_decorations, int num_types, TypeId t0, int max_n) {
  auto gen = plain_enumerator(num_decorations, num_types);
  std::vector<TreeEnumerator<Tree>::WeightedDecoration> decs;
  for (int k = 1; k <= max_n; ++k)
    for (auto& t : gen.restricted(k, t0)) decs.push_back({std::move(t), k});
  return TreeEnumerator<Tree>(std::move(decs), 1);
}

// Change-of-parameter matrices.

namespace detail {

// Identity with column i replaced by v.
inline Matrix column_replaced(std::size_t n, std::size_t i, const Lambda& v) {
  Matrix m = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) m(r, i) = v[static_cast<TypeId>(r)];
  return m;
}

inline Matrix swap_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m = Matrix::identity(n);
  if (i != j) {
    m(i, i) = m(j, j) = 0;
    m(i, j) = m(j, i) = 1;
  }
  return m;
}

inline std::size_t first_nonzero(const Lambda& v, const char* what) {
  if (v.is_zero()) throw std::invalid_argument(std::string(what) + " must be nonzero");
  return static_cast<std::size_t>(v.support().begin()->first);
}

}  // namespace detail

/// Invertible M with M^T λ = μ, for nonzero λ, μ.
inline TypeMatrix transport_matrix(const Lambda& lambda, const Lambda& mu, int num_types) {
  const auto n = static_cast<std::size_t>(num_types);
  const std::size_t i = detail::first_nonzero(lambda, "lambda");
  const std::size_t j = detail::first_nonzero(mu, "mu");
  const Matrix a = detail::column_replaced(n, i, lambda);  // a e_i = λ
  const Matrix b = detail::column_replaced(n, j, mu);      // b e_j = μ
  const Matrix n_mat = b * detail::swap_matrix(n, i, j) * *a.inverse();
  return n_mat.transpose();
}

/// Invertible M with M e_{t0} = λ and M^T μ = e_{t0}, given sum_t λ_t μ_t = 1;
/// φ_M then maps (•_{t0}, ρ_{t0}) onto (•_λ, ρ_μ). When λ = e_{t0} this is
/// m(t,t0) = δ(t,t0), m(t,t') = δ(t,t') − μ_{t'} δ(t,t0).
inline TypeMatrix normalizing_matrix(const Lambda& lambda, const Lambda& mu, TypeId t0, int num_types) {
  const auto n = static_cast<std::size_t>(num_types);
  Rational dot = 0;
  for (const auto& [t, l] : lambda.support()) dot += l * mu[t];
  if (dot != 1) throw std::invalid_argument("sum_t lambda_t mu_t must be 1");
  // m1 e_{t0} = λ.
  const std::size_t i = detail::first_nonzero(lambda, "lambda");
  const Matrix m1 = detail::column_replaced(n, i, lambda) * detail::swap_matrix(n, i, static_cast<std::size_t>(t0));
  const Lambda mu1 = transform_transposed(m1, mu);  // (m1^T μ)_{t0} = 1
  Matrix m2(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t tp = 0; tp < n; ++tp) {
      const Rational d_t_t0 = t == static_cast<std::size_t>(t0) ? 1 : 0;
      if (tp == static_cast<std::size_t>(t0)) {
        m2(t, tp) = d_t_t0;
      } else {
        m2(t, tp) = Rational(t == tp ? 1 : 0) - mu1[static_cast<TypeId>(tp)] * d_t_t0;
      }
    }
  }
  return m1 * m2;
}

}  // namespace typedtrees
