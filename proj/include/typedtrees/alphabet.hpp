#pragma once

// Finite type and decoration alphabets.

#include "typedtrees/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace typedtrees {

class AlphabetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_identifier(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace detail {

inline std::map<std::string, int> index_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw AlphabetError(std::string(what) + " alphabet must be nonempty");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_identifier(names[i])) {
      throw AlphabetError(std::string(what) + " name '" + names[i] + "' is not an identifier");
    }
    if (!index.emplace(names[i], static_cast<int>(i)).second) {
      throw AlphabetError(std::string("duplicate ") + what + " name '" + names[i] + "'");
    }
  }
  return index;
}

}  // namespace detail

/// Edge types, identified by their position in the list.
class TypeAlphabet {
 public:
  explicit TypeAlphabet(std::vector<std::string> names)
      : names_(std::move(names)), index_(detail::index_names(names_, "type")) {}

  /// Anonymous alphabet `t0,...,t{n-1}`.
  static TypeAlphabet numbered(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
    return TypeAlphabet(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(TypeId t) const {
    check(t);
    return names_[static_cast<std::size_t>(t)];
  }
  std::optional<TypeId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  TypeId id(const std::string& name) const {
    if (auto t = find(name)) return *t;
    throw AlphabetError("unknown type '" + name + "'");
  }
  void check(TypeId t) const {
    if (t < 0 || t >= size()) throw AlphabetError("type id " + std::to_string(t) + " out of range");
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

/// Vertex decorations, optionally carrying a commutative semigroup law used by
/// the contraction coproduct. A one-letter alphabet always has its unique law.
class DecorationAlphabet {
 public:
  using Table = std::vector<std::vector<DecId>>;

  explicit DecorationAlphabet(std::vector<std::string> names)
      : names_(std::move(names)), index_(detail::index_names(names_, "decoration")) {
    if (index_.count("1")) throw AlphabetError("decoration name '1' is reserved for the empty forest");
    if (names_.size() == 1) table_ = Table{{0}};
  }

  static DecorationAlphabet numbered(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("d" + std::to_string(i));
    return DecorationAlphabet(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(DecId d) const {
    check(d);
    return names_[static_cast<std::size_t>(d)];
  }
  std::optional<DecId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  DecId id(const std::string& name) const {
    if (auto d = find(name)) return *d;
    throw AlphabetError("unknown decoration '" + name + "'");
  }
  void check(DecId d) const {
    if (d < 0 || d >= size()) throw AlphabetError("decoration id " + std::to_string(d) + " out of range");
  }
  const std::vector<std::string>& names() const { return names_; }

  /// Installs `table[a][b] = a + b`, checked exhaustively for closure,
  /// associativity and commutativity.
  void set_semigroup(Table table) {
    const auto n = static_cast<std::size_t>(size());
    if (table.size() != n) throw AlphabetError("semigroup table has wrong number of rows");
    for (const auto& row : table) {
      if (row.size() != n) throw AlphabetError("semigroup table has wrong number of columns");
      for (DecId v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw AlphabetError("semigroup table not closed");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] != table[b][a]) {
          throw AlphabetError("semigroup law not commutative at (" + names_[a] + "," + names_[b] + ")");
        }
        for (std::size_t c = 0; c < n; ++c) {
          const auto ab = static_cast<std::size_t>(table[a][b]);
          const auto bc = static_cast<std::size_t>(table[b][c]);
          if (table[ab][c] != table[a][bc]) {
            throw AlphabetError("semigroup law not associative at (" + names_[a] + "," + names_[b] + "," +
                                names_[c] + ")");
          }
        }
      }
    }
    table_ = std::move(table);
  }

  /// d + d' = the later of the two in alphabet order.
  void set_max_semigroup() {
    Table t(names_.size(), std::vector<DecId>(names_.size()));
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) t[a][b] = static_cast<DecId>(std::max(a, b));
    set_semigroup(std::move(t));
  }

  bool has_semigroup() const { return table_.has_value(); }
  DecId add(DecId a, DecId b) const {
    if (!table_) throw AlphabetError("decoration alphabet has no semigroup law");
    check(a);
    check(b);
    return (*table_)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::optional<Table> table_;
};

/// The (D, T) pair every plain-tree computation is relative to.
struct Alphabets {
  DecorationAlphabet decorations;
  TypeAlphabet types;

  void validate(const Tree& t) const {
    decorations.check(t.dec);
    for (const auto& b : t.children) {
      types.check(b.type);
      validate(b.tree);
    }
  }
};

/// Canonical representative of a tree given with arbitrary child order.
inline Tree canonicalize(const Alphabets& alphabets, Tree raw) {
  alphabets.validate(raw);
  return canonicalize(std::move(raw));
}

}  // namespace typedtrees
