#pragma once

// Finite formal linear combinations with exact rational coefficients.

#include "typedtrees/alphabet.hpp"
#include "typedtrees/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typedtrees {

template <class B>
class LinComb {
 public:
  using basis_type = B;
  using map_type = std::map<B, Rational>;

  LinComb() = default;
  explicit LinComb(B b, Rational c = 1) { add(std::move(b), c); }

  void add(const B& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(B&& b, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(std::move(b), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  /// this += c * other
  void add(const LinComb& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [b, k] : other.terms_) add(b, c * k);
  }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    add(o, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, -1);
    return *this;
  }
  LinComb& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

/// a + c * b
template <class B>
LinComb<B> combine(const LinComb<B>& a, const Rational& c, const LinComb<B>& b) {
  LinComb<B> r = a;
  r.add(b, c);
  return r;
}

/// Extends `f : B -> LinComb<C>` linearly.
template <class C, class B, class F>
LinComb<C> apply_linear(const LinComb<B>& x, F&& f) {
  LinComb<C> out;
  for (const auto& [b, c] : x) out.add(f(b), c);
  return out;
}

/// Extends `f : (A, B) -> LinComb<C>` bilinearly.
template <class C, class A, class B, class F>
LinComb<C> apply_bilinear(const LinComb<A>& x, const LinComb<B>& y, F&& f) {
  LinComb<C> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(f(a, b), ca * cb);
  return out;
}

// Tensor keys. Pairs and triples compare colexicographically (last factor
// first); this fixes the printed term order of coproducts.

template <class A, class B = A>
struct Tensor2 {
  A first;
  B second;

  friend std::strong_ordering operator<=>(const Tensor2& x, const Tensor2& y) {
    if (auto c = x.second <=> y.second; c != 0) return c;
    return x.first <=> y.first;
  }
  friend bool operator==(const Tensor2& x, const Tensor2& y) { return x.first == y.first && x.second == y.second; }
};

template <class A, class B = A, class C = B>
struct Tensor3 {
  A first;
  B second;
  C third;

  friend std::strong_ordering operator<=>(const Tensor3& x, const Tensor3& y) {
    if (auto c = x.third <=> y.third; c != 0) return c;
    if (auto c = x.second <=> y.second; c != 0) return c;
    return x.first <=> y.first;
  }
  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.first == y.first && x.second == y.second && x.third == y.third;
  }
};

template <class A, class B>
LinComb<Tensor2<A, B>> tensor(const LinComb<A>& a, const LinComb<B>& b) {
  LinComb<Tensor2<A, B>> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(Tensor2<A, B>{x, y}, cx * cy);
  return out;
}

template <class A, class B, class C>
LinComb<Tensor3<A, B, C>> tensor(const LinComb<A>& a, const LinComb<B>& b, const LinComb<C>& c) {
  LinComb<Tensor3<A, B, C>> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      for (const auto& [z, cz] : c) out.add(Tensor3<A, B, C>{x, y, z}, cx * cy * cz);
  return out;
}

/// Applies f (x) g to a combination of pairs.
template <class A2, class B2, class A, class B, class F, class G>
LinComb<Tensor2<A2, B2>> map_tensor(const LinComb<Tensor2<A, B>>& x, F&& f, G&& g) {
  LinComb<Tensor2<A2, B2>> out;
  for (const auto& [k, c] : x) out.add(tensor(f(k.first), g(k.second)), c);
  return out;
}

/// A vector lambda = (lambda_t) of rationals indexed by edge types; absent
/// entries are zero.
class Lambda {
 public:
  Lambda() = default;

  static Lambda single(TypeId t, Rational c = 1) {
    Lambda l;
    l.set(t, std::move(c));
    return l;
  }
  static Lambda uniform(int num_types, const Rational& c = 1) {
    Lambda l;
    for (TypeId t = 0; t < num_types; ++t) l.set(t, c);
    return l;
  }

  /// Parses `name=q,name=q,...`; the empty string is the zero vector.
  static Lambda parse(std::string_view text, const TypeAlphabet& types) {
    Lambda l;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      const std::string_view item = text.substr(pos, comma - pos);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("lambda entry '" + std::string(item) + "' lacks '='");
      const TypeId t = types.id(std::string(item.substr(0, eq)));
      if (l.entries_.count(t)) throw std::invalid_argument("lambda entry for '" + types.name(t) + "' given twice");
      l.set(t, parse_rational(item.substr(eq + 1)));
      pos = comma + 1;
      if (comma + 1 == text.size()) throw std::invalid_argument("trailing ',' in lambda");
    }
    return l;
  }

  Rational operator[](TypeId t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? Rational(0) : it->second;
  }
  void set(TypeId t, Rational c) {
    if (c == 0) {
      entries_.erase(t);
    } else {
      entries_[t] = std::move(c);
    }
  }
  /// Nonzero entries in type order.
  const std::map<TypeId, Rational>& support() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  std::string render(const TypeAlphabet& types) const {
    std::string out;
    for (const auto& [t, c] : entries_) {
      if (!out.empty()) out += ',';
      out += types.name(t) + "=" + to_string(c);
    }
    return out;
  }

  friend bool operator==(const Lambda& a, const Lambda& b) { return a.entries_ == b.entries_; }

 private:
  std::map<TypeId, Rational> entries_;
};

/// `c * key` terms joined by ` + `; the empty combination is `0`.
template <class B, class Render>
std::string render(const LinComb<B>& x, Render&& key) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : x) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    out += " * ";
    out += key(b);
  }
  return out;
}

template <class A, class B, class RA, class RB>
std::string render_tensor(const Tensor2<A, B>& t, RA&& ra, RB&& rb) {
  return ra(t.first) + " | " + rb(t.second);
}

template <class A, class B, class C, class RA, class RB, class RC>
std::string render_tensor(const Tensor3<A, B, C>& t, RA&& ra, RB&& rb, RC&& rc) {
  return ra(t.first) + " | " + rb(t.second) + " | " + rc(t.third);
}

/// Inverse of `render`: splits on ` + ` and ` * `, handing each key text to
/// `parse_key`.
template <class B, class ParseKey>
LinComb<B> parse_lincomb(std::string_view text, ParseKey&& parse_key) {
  LinComb<B> out;
  if (text == "0") return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t plus = text.find(" + ", pos);
    const std::string_view term = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    const std::size_t star = term.find(" * ");
    if (star == std::string_view::npos) throw std::invalid_argument("term '" + std::string(term) + "' lacks ' * '");
    out.add(parse_key(term.substr(star + 3)), parse_rational(term.substr(0, star)));
    if (plus == std::string_view::npos) break;
    pos = plus + 3;
  }
  return out;
}

/// Splits `x | y | z` into factors.
inline std::vector<std::string_view> split_tensor(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t bar = text.find(" | ", pos);
    parts.push_back(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos));
    if (bar == std::string_view::npos) break;
    pos = bar + 3;
  }
  return parts;
}

}  // namespace typedtrees
