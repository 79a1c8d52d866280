#pragma once

// Admissible cuts and connected vertex partitions.

#include "typedtrees/tree.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace typedtrees {

/// A nonempty antichain of edges together with the pieces it produces.
template <class Dec>
struct AdmissibleCut {
  std::vector<Address> edges;  // lower endpoints, preorder
  BasicTree<Dec> root_part;    // component containing the root
  BasicForest<Dec> pruned;     // all other components
  std::vector<TypeId> types;   // types of the cut edges, sorted
};

namespace detail {

template <class Dec>
struct PartialCut {
  std::vector<Address> edges;
  BasicTree<Dec> root_part;
  std::vector<BasicTree<Dec>> pruned;
  std::vector<TypeId> types;
};

// All antichains (including the empty one) of the subtree at `prefix`.
template <class Dec>
std::vector<PartialCut<Dec>> partial_cuts(const BasicTree<Dec>& t, Address& prefix) {
  std::vector<PartialCut<Dec>> acc{PartialCut<Dec>{{}, BasicTree<Dec>(t.dec), {}, {}}};
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const auto& br = t.children[i];
    prefix.push_back(static_cast<int>(i));
    const auto below = partial_cuts(br.tree, prefix);
    std::vector<PartialCut<Dec>> next;
    next.reserve(acc.size() * (below.size() + 1));
    for (const auto& base : acc) {
      // Cut the edge into this child.
      PartialCut<Dec> cut = base;
      cut.edges.push_back(prefix);
      cut.pruned.push_back(br.tree);
      cut.types.push_back(br.type);
      next.push_back(std::move(cut));
      // Keep it and cut somewhere below (or nowhere).
      for (const auto& sub : below) {
        PartialCut<Dec> keep = base;
        keep.root_part.children.push_back({br.type, sub.root_part});
        keep.edges.insert(keep.edges.end(), sub.edges.begin(), sub.edges.end());
        keep.pruned.insert(keep.pruned.end(), sub.pruned.begin(), sub.pruned.end());
        keep.types.insert(keep.types.end(), sub.types.begin(), sub.types.end());
        next.push_back(std::move(keep));
      }
    }
    acc = std::move(next);
    prefix.pop_back();
  }
  for (auto& pc : acc) sort_children(pc.root_part);
  return acc;
}

}  // namespace detail

template <class Dec>
std::vector<AdmissibleCut<Dec>> admissible_cuts(const BasicTree<Dec>& t) {
  Address prefix;
  std::vector<AdmissibleCut<Dec>> out;
  for (auto& pc : detail::partial_cuts(t, prefix)) {
    if (pc.edges.empty()) continue;
    std::sort(pc.edges.begin(), pc.edges.end());
    std::sort(pc.types.begin(), pc.types.end());
    out.push_back({std::move(pc.edges), std::move(pc.root_part), BasicForest<Dec>(std::move(pc.pruned)),
                   std::move(pc.types)});
  }
  return out;
}

/// A partition of the vertices of a forest into blocks that are connected in
/// the forest, with the contracted skeleton.
template <class Dec>
struct ConnectedPartition {
  std::vector<BasicTree<Dec>> blocks;     // block trees, ordered by their top vertex in preorder
  std::vector<std::vector<int>> members;  // FlatForest vertex ids of each block
  std::vector<int> block_of;              // block index of every FlatForest vertex
  /// One tree per component of the input; vertices are block indices and the
  /// edges are the surviving (cut) edges with their original types.
  std::vector<BasicTree<int>> skeleton;
  std::vector<TypeId> crossing_types;     // types of the edges between blocks, sorted
};

/// Enumerates every partition of V(f) into connected blocks. In a forest such
/// partitions correspond one-to-one with subsets of kept edges, so each subset
/// is visited once. With `restrict_t0`, only partitions whose blocks all lack a
/// root edge of type t0 are returned.
template <class Dec>
std::vector<ConnectedPartition<Dec>> connected_partitions(const BasicForest<Dec>& f,
                                                          std::optional<TypeId> restrict_t0 = std::nullopt) {
  const FlatForest<Dec> flat(f);
  const auto& edges = flat.edges();
  const std::size_t ne = edges.size();
  std::vector<ConnectedPartition<Dec>> out;
  std::vector<char> kept(flat.size(), 0);  // kept[v]: edge from v to its parent survives inside a block

  for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
    for (std::size_t e = 0; e < ne; ++e) kept[static_cast<std::size_t>(edges[e])] = (mask >> e) & 1u;

    ConnectedPartition<Dec> p;
    p.block_of.assign(flat.size(), -1);
    std::vector<int> tops;
    bool admissible = true;
    for (int v = 0; v < static_cast<int>(flat.size()); ++v) {
      const auto& x = flat.vertex(v);
      if (x.parent < 0 || !kept[static_cast<std::size_t>(v)]) {
        p.block_of[static_cast<std::size_t>(v)] = static_cast<int>(tops.size());
        tops.push_back(v);
        p.members.emplace_back();
      } else {
        p.block_of[static_cast<std::size_t>(v)] = p.block_of[static_cast<std::size_t>(x.parent)];
        if (restrict_t0 && x.type == *restrict_t0 && tops[static_cast<std::size_t>(p.block_of[static_cast<std::size_t>(v)])] == x.parent) {
          admissible = false;
          break;
        }
      }
      p.members[static_cast<std::size_t>(p.block_of[static_cast<std::size_t>(v)])].push_back(v);
    }
    if (!admissible) continue;

    auto keep = [&](int c) { return kept[static_cast<std::size_t>(c)] != 0; };
    for (int top : tops) p.blocks.push_back(flat.rebuild(top, keep));

    // Skeleton: block b gets a child block for each cut edge leaving it.
    std::vector<std::vector<std::pair<TypeId, int>>> down(tops.size());
    for (int v : edges) {
      if (kept[static_cast<std::size_t>(v)]) continue;
      const auto& x = flat.vertex(v);
      down[static_cast<std::size_t>(p.block_of[static_cast<std::size_t>(x.parent)])].push_back(
          {x.type, p.block_of[static_cast<std::size_t>(v)]});
      p.crossing_types.push_back(x.type);
    }
    std::sort(p.crossing_types.begin(), p.crossing_types.end());
    auto build = [&](auto&& self, int b) -> BasicTree<int> {
      BasicTree<int> s(b);
      for (auto [ty, c] : down[static_cast<std::size_t>(b)]) s.children.push_back({ty, self(self, c)});
      sort_children(s);
      return s;
    };
    for (int r : flat.roots()) p.skeleton.push_back(build(build, p.block_of[static_cast<std::size_t>(r)]));
    out.push_back(std::move(p));
  }
  return out;
}

template <class Dec>
std::vector<ConnectedPartition<Dec>> connected_partitions(const BasicTree<Dec>& t,
                                                          std::optional<TypeId> restrict_t0 = std::nullopt) {
  return connected_partitions(BasicForest<Dec>(t), restrict_t0);
}

}  // namespace typedtrees
