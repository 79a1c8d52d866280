#pragma once

// The operad of typed trees on label sets, and the free multiple permutative
// algebra of its Koszul dual.

#include "typedtrees/lincomb.hpp"
#include "typedtrees/literal.hpp"
#include "typedtrees/prelie.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace typedtrees {

/// Typed tree whose vertices are distinct integer labels.
using LabeledTree = BasicTree<int>;

class OperadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labels spelled as nonnegative integers, types by name.
struct LabelSyntax {
  using dec_type = int;
  const TypeAlphabet* types;

  int parse_dec(Cursor& in) const {
    const std::size_t at = in.position();
    const std::string s = in.identifier();
    if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 9) {
      in.fail_at(at, "expected an integer label");
    }
    return std::stoi(s);
  }
  std::string dec_name(int label) const { return std::to_string(label); }
  TypeId parse_type(Cursor& in) const {
    const std::size_t at = in.position();
    const std::string name = in.identifier();
    if (auto t = types->find(name)) return *t;
    in.fail_at(at, "unknown type '" + name + "'");
  }
  std::string type_name(TypeId t) const { return types->name(t); }
};

inline void collect_labels(const LabeledTree& t, std::vector<int>& out) {
  out.push_back(t.dec);
  for (const auto& b : t.children) collect_labels(b.tree, out);
}

inline std::vector<int> labels(const LabeledTree& t) {
  std::vector<int> out;
  collect_labels(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_labels_distinct(const LabeledTree& t) {
  const auto ls = labels(t);
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end()) throw OperadError("repeated vertex label");
}

/// Renames labels through `f`, keeping the result canonical.
template <class F>
LabeledTree relabel(const LabeledTree& t, F&& f) {
  LabeledTree r(f(t.dec));
  for (const auto& b : t.children) r.children.push_back({b.type, relabel(b.tree, f)});
  sort_children(r);
  return r;
}

/// Renumbers labels to 1..n preserving their order.
inline LabeledTree standardize(const LabeledTree& t) {
  const auto ls = labels(t);
  return relabel(t, [&](int l) { return static_cast<int>(std::lower_bound(ls.begin(), ls.end(), l) - ls.begin()) + 1; });
}

namespace detail {

inline bool graft_at_label(LabeledTree& t, int label, const BasicBranch<int>& b) {
  if (t.dec == label) {
    t.children.push_back(b);
    sort_children(t);
    return true;
  }
  for (auto& c : t.children) {
    if (graft_at_label(c.tree, label, b)) {
      sort_children(t);
      return true;
    }
  }
  return false;
}

// s with every branch in `branches` grafted on some vertex of s, one result
// per assignment.
inline std::vector<LabeledTree> attach_branches(const LabeledTree& s, const std::vector<BasicBranch<int>>& branches) {
  const auto targets = labels(s);
  std::vector<LabeledTree> out{s};
  for (const auto& b : branches) {
    std::vector<LabeledTree> next;
    next.reserve(out.size() * targets.size());
    for (const auto& r : out)
      for (int l : targets) {
        LabeledTree g = r;
        graft_at_label(g, l, b);
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<LabeledTree> substitute(const LabeledTree& t, int a, const LabeledTree& s) {
  if (t.dec == a) return attach_branches(s, t.children);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    auto below = substitute(t.children[i].tree, a, s);
    if (below.empty()) continue;
    std::vector<LabeledTree> out;
    for (auto& sub : below) {
      LabeledTree r = t;
      r.children[i].tree = std::move(sub);
      sort_children(r);
      out.push_back(std::move(r));
    }
    return out;
  }
  return {};
}

}  // namespace detail

/// T ∘_a S: delete the branches of a, put S in place of a, then graft each
/// deleted branch on some vertex of S, summing over all choices. Labels of
/// the result are (A \ {a}) ⊔ B, kept verbatim.
inline LinComb<LabeledTree> operad_compose(const LabeledTree& t, int a, const LabeledTree& s) {
  const auto la = labels(t);
  const auto lb = labels(s);
  if (std::adjacent_find(la.begin(), la.end()) != la.end() || std::adjacent_find(lb.begin(), lb.end()) != lb.end()) {
    throw OperadError("repeated vertex label");
  }
  if (!std::binary_search(la.begin(), la.end(), a)) throw OperadError("label " + std::to_string(a) + " not in tree");
  for (int l : lb) {
    if (l != a && std::binary_search(la.begin(), la.end(), l)) {
      throw OperadError("label " + std::to_string(l) + " occurs in both trees");
    }
  }
  LinComb<LabeledTree> out;
  for (auto& r : detail::substitute(t, a, s)) out.add(std::move(r), 1);
  return out;
}

inline LinComb<LabeledTree> operad_compose(const LinComb<LabeledTree>& x, int a, const LinComb<LabeledTree>& y) {
  LinComb<LabeledTree> out;
  for (const auto& [t, ct] : x)
    for (const auto& [s, cs] : y) out.add(operad_compose(t, a, s), ct * cs);
  return out;
}

/// Classical ∘_i on trees labeled 1..n and 1..m.
inline LinComb<LabeledTree> operad_compose_classical(const LabeledTree& t, int i, const LabeledTree& s) {
  const int m = static_cast<int>(s.size());
  const LabeledTree t2 = relabel(t, [&](int j) { return j > i ? j + m - 1 : j; });
  const LabeledTree s2 = relabel(s, [&](int k) { return k + i - 1; });
  return operad_compose(t2, i, s2);
}

/// All typed trees with vertex set {1..n}.
inline std::vector<LabeledTree> labeled_trees(int n, int num_types) {
  std::vector<LabeledTree> out;
  if (n < 1) return out;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<TypeId> type(static_cast<std::size_t>(n) + 1, 0);
  for (int root = 1; root <= n; ++root) {
    std::vector<int> others;
    for (int v = 1; v <= n; ++v)
      if (v != root) others.push_back(v);
    auto build = [&](auto&& self, int v) -> LabeledTree {
      LabeledTree t(v);
      for (int c : others)
        if (parent[static_cast<std::size_t>(c)] == v) t.children.push_back({type[static_cast<std::size_t>(c)], self(self, c)});
      sort_children(t);
      return t;
    };
    auto acyclic = [&] {
      for (int v : others) {
        int x = v;
        for (int steps = 0; x != root; ++steps) {
          if (steps > n) return false;
          x = parent[static_cast<std::size_t>(x)];
        }
      }
      return true;
    };
    auto choose = [&](auto&& self, std::size_t i) -> void {
      if (i == others.size()) {
        if (!acyclic()) return;
        // Types of the n-1 edges.
        auto types = [&](auto&& tself, std::size_t j) -> void {
          if (j == others.size()) {
            out.push_back(build(build, root));
            return;
          }
          for (TypeId ty = 0; ty < num_types; ++ty) {
            type[static_cast<std::size_t>(others[j])] = ty;
            tself(tself, j + 1);
          }
        };
        types(types, 0);
        return;
      }
      for (int p = 1; p <= n; ++p) {
        if (p == others[i]) continue;
        parent[static_cast<std::size_t>(others[i])] = p;
        self(self, i + 1);
      }
    };
    choose(choose, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// dim P_T(n) = T^{n-1} n^{n-1}.
inline Integer operad_dimension(int n, int num_types) {
  if (n < 1) throw std::invalid_argument("arity must be positive");
  return power(Integer(num_types), static_cast<unsigned long>(n - 1)) * power(Integer(n), static_cast<unsigned long>(n - 1));
}

/// The tree 1 -t- 2 realizing •_t.
inline LabeledTree operad_generator(TypeId t) { return make_ladder(1, t, 2); }

/// x •_t y computed in the operad: label the vertices of x and y, compose the
/// generator 1 -t- 2 with them, and read the decorations back.
inline LinComb<Tree> operadic_prelie_product(const Tree& x, const Tree& y, TypeId t) {
  std::vector<DecId> decs;
  auto label = [&](auto&& self, const Tree& u) -> LabeledTree {
    LabeledTree r(static_cast<int>(decs.size()) + 3);  // labels 1, 2 belong to the generator
    decs.push_back(u.dec);
    for (const auto& b : u.children) r.children.push_back({b.type, self(self, b.tree)});
    sort_children(r);
    return r;
  };
  const LabeledTree lx = label(label, x);
  const LabeledTree ly = label(label, y);
  LinComb<Tree> out;
  for (const auto& [u, cu] : operad_compose(operad_generator(t), 1, lx)) {
    for (const auto& [v, cv] : operad_compose(u, 2, ly)) {
      auto back = [&](auto&& self, const LabeledTree& w) -> Tree {
        Tree r(decs[static_cast<std::size_t>(w.dec - 3)]);
        for (const auto& b : w.children) r.children.push_back({b.type, self(self, b.tree)});
        sort_children(r);
        return r;
      };
      out.add(back(back, v), cu * cv);
    }
  }
  return out;
}

// Free multiple permutative algebra V (x) S(V^{⊕T}).

struct PermWord {
  int head = 0;
  std::vector<std::pair<int, TypeId>> tail;  // sorted multiset of (generator, type)

  PermWord() = default;
  PermWord(int h, std::vector<std::pair<int, TypeId>> t) : head(h), tail(std::move(t)) {
    std::sort(tail.begin(), tail.end());
  }
  friend auto operator<=>(const PermWord&, const PermWord&) = default;
  friend bool operator==(const PermWord&, const PermWord&) = default;
};

/// (v (x) w) ⋄_t (v' (x) w') = v (x) w w' (v' δ_t).
inline PermWord permutative_product(const PermWord& x, const PermWord& y, TypeId t) {
  std::vector<std::pair<int, TypeId>> tail = x.tail;
  tail.insert(tail.end(), y.tail.begin(), y.tail.end());
  tail.push_back({y.head, t});
  return PermWord(x.head, std::move(tail));
}

inline LinComb<PermWord> permutative_product(const LinComb<PermWord>& x, const LinComb<PermWord>& y, TypeId t) {
  LinComb<PermWord> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(permutative_product(a, b, t), ca * cb);
  return out;
}

/// Distinct words reached by all bracketings, orderings and type choices of
/// the generators 1..n, each used once.
inline std::set<PermWord> multilinear_permutative_words(int n, int num_types) {
  std::map<unsigned, std::set<PermWord>> memo;
  auto words = [&](auto&& self, unsigned mask) -> const std::set<PermWord>& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::set<PermWord> out;
    if ((mask & (mask - 1)) == 0) {
      int g = 1;
      while (!((mask >> (g - 1)) & 1u)) ++g;
      out.insert(PermWord(g, {}));
    } else {
      for (unsigned left = (mask - 1) & mask; left != 0; left = (left - 1) & mask) {
        const unsigned right = mask & ~left;
        const auto& ls = self(self, left);
        const auto& rs = self(self, right);
        for (const auto& a : ls)
          for (const auto& b : rs)
            for (TypeId t = 0; t < num_types; ++t) out.insert(permutative_product(a, b, t));
      }
    }
    return memo.emplace(mask, std::move(out)).first->second;
  };
  return words(words, (1u << n) - 1);
}

inline std::string render(const PermWord& w, const TypeAlphabet& types) {
  std::string out = "x" + std::to_string(w.head);
  if (w.tail.empty()) return out + " (x) 1";
  out += " (x)";
  for (const auto& [g, t] : w.tail) out += " x" + std::to_string(g) + "." + types.name(t);
  return out;
}

}  // namespace typedtrees
