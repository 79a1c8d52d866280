#pragma once

// Typed decorated rooted trees and forests, stored in canonical form.
//
// A tree is a root decoration plus a multiset of (edge type, subtree) branches.
// Branches are kept sorted by (type, subtree), so two values compare equal
// exactly when the trees they describe are isomorphic. The decoration type is a
// template parameter: plain trees use small integer ids, labeled (operad) trees
// use integer labels, and contracted forests are decorated by trees themselves.

#include "typedtrees/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace typedtrees {

using TypeId = int;
using DecId = int;

/// Path from the root: the i-th entry selects a child by canonical index.
/// The empty address is the root. An edge is addressed by its lower endpoint.
using Address = std::vector<int>;

template <class Dec>
struct BasicBranch;

template <class Dec>
struct BasicTree {
  Dec dec{};
  std::vector<BasicBranch<Dec>> children;

  BasicTree() = default;
  explicit BasicTree(Dec d) : dec(std::move(d)) {}
  BasicTree(Dec d, std::vector<BasicBranch<Dec>> branches)
      : dec(std::move(d)), children(std::move(branches)) {}

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& b : children) n += b.tree.size();
    return n;
  }
  bool is_leaf() const { return children.empty(); }
};

template <class Dec>
struct BasicBranch {
  TypeId type{};
  BasicTree<Dec> tree;
};

template <class Dec>
std::strong_ordering operator<=>(const BasicTree<Dec>& a, const BasicTree<Dec>& b);

template <class Dec>
std::strong_ordering operator<=>(const BasicBranch<Dec>& a, const BasicBranch<Dec>& b) {
  if (auto c = a.type <=> b.type; c != 0) return c;
  return a.tree <=> b.tree;
}

template <class Dec>
std::strong_ordering operator<=>(const BasicTree<Dec>& a, const BasicTree<Dec>& b) {
  if (auto c = std::compare_three_way{}(a.dec, b.dec); c != 0) return c;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

template <class Dec>
bool operator==(const BasicBranch<Dec>& a, const BasicBranch<Dec>& b) {
  return a.type == b.type && a.tree == b.tree;
}

template <class Dec>
bool operator==(const BasicTree<Dec>& a, const BasicTree<Dec>& b) {
  return a.dec == b.dec && a.children == b.children;
}

/// Restores sorted child order at `t` only; subtrees must already be canonical.
template <class Dec>
void sort_children(BasicTree<Dec>& t) {
  std::sort(t.children.begin(), t.children.end());
}

/// Canonical representative of an arbitrarily ordered tree. Idempotent.
template <class Dec>
BasicTree<Dec> canonicalize(BasicTree<Dec> t) {
  for (auto& b : t.children) b.tree = canonicalize(std::move(b.tree));
  sort_children(t);
  return t;
}

template <class Dec>
bool is_canonical(const BasicTree<Dec>& t) {
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (!is_canonical(t.children[i].tree)) return false;
    if (i > 0 && t.children[i] < t.children[i - 1]) return false;
  }
  return true;
}

template <class Dec>
BasicTree<Dec> make_ladder(Dec top, TypeId type, Dec bottom) {
  return BasicTree<Dec>(std::move(top), {BasicBranch<Dec>{type, BasicTree<Dec>(std::move(bottom))}});
}

/// True when some edge leaving the root has type `t0` (the tree is then not in
/// the restricted family used by the freeness results).
template <class Dec>
bool has_root_edge_of_type(const BasicTree<Dec>& t, TypeId t0) {
  return std::any_of(t.children.begin(), t.children.end(),
                     [t0](const BasicBranch<Dec>& b) { return b.type == t0; });
}

template <class Dec>
std::size_t count_root_edges_of_type(const BasicTree<Dec>& t, TypeId t0) {
  return static_cast<std::size_t>(std::count_if(
      t.children.begin(), t.children.end(), [t0](const BasicBranch<Dec>& b) { return b.type == t0; }));
}

/// Multiset of trees in sorted order; the empty forest is the unit.
template <class Dec>
struct BasicForest {
  std::vector<BasicTree<Dec>> trees;

  BasicForest() = default;
  explicit BasicForest(std::vector<BasicTree<Dec>> ts) : trees(std::move(ts)) {
    std::sort(trees.begin(), trees.end());
  }
  explicit BasicForest(BasicTree<Dec> t) { trees.push_back(std::move(t)); }

  bool empty() const { return trees.empty(); }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& t : trees) n += t.size();
    return n;
  }

  friend auto operator<=>(const BasicForest& a, const BasicForest& b) { return a.trees <=> b.trees; }
  friend bool operator==(const BasicForest& a, const BasicForest& b) = default;
};

/// Disjoint union.
template <class Dec>
BasicForest<Dec> operator*(const BasicForest<Dec>& a, const BasicForest<Dec>& b) {
  BasicForest<Dec> r;
  r.trees.reserve(a.trees.size() + b.trees.size());
  std::merge(a.trees.begin(), a.trees.end(), b.trees.begin(), b.trees.end(), std::back_inserter(r.trees));
  return r;
}

// Symmetry factors. Equal neighbours in the sorted child list are exactly the
// interchangeable branches, so |Aut| is a product of m! * |Aut(child)|^m.

template <class Dec>
Integer symmetry_factor(const BasicTree<Dec>& t) {
  Integer s = 1;
  std::size_t i = 0;
  while (i < t.children.size()) {
    std::size_t j = i + 1;
    while (j < t.children.size() && t.children[j] == t.children[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    s *= factorial(m) * power(symmetry_factor(t.children[i].tree), m);
    i = j;
  }
  return s;
}

template <class Dec>
Integer symmetry_factor(const BasicForest<Dec>& f) {
  Integer s = 1;
  std::size_t i = 0;
  while (i < f.trees.size()) {
    std::size_t j = i + 1;
    while (j < f.trees.size() && f.trees[j] == f.trees[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    s *= factorial(m) * power(symmetry_factor(f.trees[i]), m);
    i = j;
  }
  return s;
}

// Vertex addressing.

template <class Dec>
void collect_addresses(const BasicTree<Dec>& t, Address& prefix, std::vector<Address>& out) {
  out.push_back(prefix);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    prefix.push_back(static_cast<int>(i));
    collect_addresses(t.children[i].tree, prefix, out);
    prefix.pop_back();
  }
}

/// All vertex addresses in preorder (root first, children in canonical order).
template <class Dec>
std::vector<Address> vertex_addresses(const BasicTree<Dec>& t) {
  std::vector<Address> out;
  Address prefix;
  collect_addresses(t, prefix, out);
  return out;
}

template <class Dec>
const BasicTree<Dec>* find_vertex(const BasicTree<Dec>& t, const Address& addr) {
  const BasicTree<Dec>* cur = &t;
  for (int i : addr) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->children.size()) return nullptr;
    cur = &cur->children[static_cast<std::size_t>(i)].tree;
  }
  return cur;
}

/// Preorder-flattened forest with parent links. Used wherever vertices must be
/// addressed individually (partitions, simultaneous grafting, labeled trees).
template <class Dec>
class FlatForest {
 public:
  struct Vertex {
    Dec dec;
    int parent = -1;       // -1 for roots
    TypeId type = 0;       // type of the edge to the parent; unused for roots
    int component = 0;     // index of the tree in the forest
    Address address;       // address inside its tree
    std::vector<int> children;
  };

  FlatForest() = default;
  explicit FlatForest(const BasicForest<Dec>& f) {
    for (std::size_t i = 0; i < f.trees.size(); ++i) add_tree(f.trees[i], static_cast<int>(i));
  }
  explicit FlatForest(const BasicTree<Dec>& t) { add_tree(t, 0); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& roots() const { return roots_; }
  /// Lower endpoints of all edges, in preorder.
  const std::vector<int>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }

  /// Tree rooted at `v` keeping only child edges accepted by `keep`, plus any
  /// extra branches attached per vertex. The result is canonical.
  BasicTree<Dec> rebuild(int v, const std::function<bool(int)>& keep,
                         const std::vector<std::vector<BasicBranch<Dec>>>* extra = nullptr) const {
    const Vertex& x = vertex(v);
    BasicTree<Dec> t(x.dec);
    for (int c : x.children) {
      if (keep(c)) t.children.push_back({vertex(c).type, rebuild(c, keep, extra)});
    }
    if (extra) {
      for (const auto& b : (*extra)[static_cast<std::size_t>(v)]) t.children.push_back(b);
    }
    sort_children(t);
    return t;
  }

  BasicTree<Dec> rebuild(int v) const {
    return rebuild(v, [](int) { return true; });
  }

 private:
  void add_tree(const BasicTree<Dec>& t, int component) {
    Address addr;
    const int root = visit(t, -1, 0, component, addr);
    roots_.push_back(root);
  }

  int visit(const BasicTree<Dec>& t, int parent, TypeId type, int component, Address& addr) {
    const int id = static_cast<int>(vertices_.size());
    vertices_.push_back(Vertex{t.dec, parent, type, component, addr, {}});
    if (parent >= 0) {
      vertices_[static_cast<std::size_t>(parent)].children.push_back(id);
      edges_.push_back(id);
    }
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      addr.push_back(static_cast<int>(i));
      visit(t.children[i].tree, id, t.children[i].type, component, addr);
      addr.pop_back();
    }
    return id;
  }

  std::vector<Vertex> vertices_;
  std::vector<int> roots_;
  std::vector<int> edges_;
};

using Tree = BasicTree<DecId>;
using Branch = BasicBranch<DecId>;
using Forest = BasicForest<DecId>;

}  // namespace typedtrees
