#pragma once

// Exhaustive generation of canonical trees and forests by vertex weight.

#include "typedtrees/tree.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace typedtrees {

enum class BasisKind { trees, forests, restricted };

namespace detail {

/// Calls `emit(chosen)` for every multiset of `items` (sorted, each with a
/// positive weight) whose weights sum to `total`. `chosen` holds indices in
/// nondecreasing order.
template <class Emit>
void for_each_weighted_multiset(const std::vector<int>& weights, int total, Emit&& emit) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      emit(chosen);
      return;
    }
    for (std::size_t i = start; i < weights.size(); ++i) {
      if (weights[i] > remaining) continue;
      chosen.push_back(i);
      self(self, i, remaining - weights[i]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, total);
}

}  // namespace detail

/// Generates all trees whose total vertex weight is n, for decorations carrying
/// individual weights (weight 1 for ordinary decorations; the vertex count of
/// the decorating tree for contracted forests). Results are memoized and
/// returned in canonical order.
template <class Dec>
class TreeEnumerator {
 public:
  struct WeightedDecoration {
    Dec dec;
    int weight = 1;
  };

  TreeEnumerator(std::vector<WeightedDecoration> decorations, int num_types)
      : decorations_(std::move(decorations)), num_types_(num_types) {
    if (num_types_ < 1) throw std::invalid_argument("need at least one type");
    for (const auto& d : decorations_) {
      if (d.weight < 1) throw std::invalid_argument("decoration weights must be positive");
    }
  }

  const std::vector<BasicTree<Dec>>& trees(int n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<BasicTree<Dec>> out;
    if (n >= 1) {
      for (int k = 1; k < n; ++k) trees(k);
      for (const auto& d : decorations_) {
        if (d.weight > n) continue;
        const int rest = n - d.weight;
        if (rest == 0) {
          out.emplace_back(d.dec);
          continue;
        }
        auto [branches, weights] = branch_candidates(rest);
        detail::for_each_weighted_multiset(weights, rest, [&](const std::vector<std::size_t>& pick) {
          BasicTree<Dec> t(d.dec);
          t.children.reserve(pick.size());
          for (std::size_t i : pick) t.children.push_back(branches[i]);
          out.push_back(std::move(t));
        });
      }
    }
    std::sort(out.begin(), out.end());
    return memo_.emplace(n, std::move(out)).first->second;
  }

  std::vector<BasicForest<Dec>> forests(int n) {
    std::vector<BasicForest<Dec>> out;
    if (n == 0) {
      out.emplace_back();
      return out;
    }
    std::vector<std::pair<BasicTree<Dec>, int>> items;
    for (int k = 1; k <= n; ++k)
      for (const auto& t : trees(k)) items.emplace_back(t, k);
    std::sort(items.begin(), items.end());
    std::vector<int> weights;
    for (const auto& it : items) weights.push_back(it.second);
    detail::for_each_weighted_multiset(weights, n, [&](const std::vector<std::size_t>& pick) {
      BasicForest<Dec> f;
      for (std::size_t i : pick) f.trees.push_back(items[i].first);
      out.push_back(std::move(f));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Trees with no edge of type `t0` leaving the root.
  std::vector<BasicTree<Dec>> restricted(int n, TypeId t0) {
    std::vector<BasicTree<Dec>> out;
    for (const auto& t : trees(n)) {
      if (!has_root_edge_of_type(t, t0)) out.push_back(t);
    }
    return out;
  }

 private:
  std::pair<std::vector<BasicBranch<Dec>>, std::vector<int>> branch_candidates(int max_weight) {
    std::vector<std::pair<BasicBranch<Dec>, int>> items;
    for (int k = 1; k <= max_weight; ++k)
      for (TypeId ty = 0; ty < num_types_; ++ty)
        for (const auto& t : trees(k)) items.push_back({BasicBranch<Dec>{ty, t}, k});
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BasicBranch<Dec>> branches;
    std::vector<int> weights;
    branches.reserve(items.size());
    for (auto& it : items) {
      branches.push_back(std::move(it.first));
      weights.push_back(it.second);
    }
    return {std::move(branches), std::move(weights)};
  }

  std::vector<WeightedDecoration> decorations_;
  int num_types_;
  std::map<int, std::vector<BasicTree<Dec>>> memo_;
};

/// Enumerator over decorations 0..D-1 (all of weight 1) and T edge types.
inline TreeEnumerator<DecId> plain_enumerator(int num_decorations, int num_types) {
  std::vector<TreeEnumerator<DecId>::WeightedDecoration> decs;
  for (DecId d = 0; d < num_decorations; ++d) decs.push_back({d, 1});
  return TreeEnumerator<DecId>(std::move(decs), num_types);
}

struct Basis {
  std::vector<Tree> trees;      // kinds `trees` and `restricted`
  std::vector<Forest> forests;  // kind `forests`
};

inline Basis generate_basis(BasisKind kind, int num_decorations, int num_types, int n,
                            std::optional<TypeId> t0 = std::nullopt) {
  if (n < 0) throw std::invalid_argument("negative size");
  if ((kind == BasisKind::restricted) != t0.has_value()) {
    throw std::invalid_argument("t0 is required exactly for the restricted kind");
  }
  auto gen = plain_enumerator(num_decorations, num_types);
  Basis b;
  switch (kind) {
    case BasisKind::trees:
      b.trees = gen.trees(n);
      break;
    case BasisKind::forests:
      b.forests = gen.forests(n);
      break;
    case BasisKind::restricted:
      b.trees = gen.restricted(n, *t0);
      break;
  }
  return b;
}

}  // namespace typedtrees
