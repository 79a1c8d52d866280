#pragma once

// Generating-function counts of typed decorated trees and forests.

#include "typedtrees/rational.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typedtrees {

/// Coefficients by degree, index 0 included.
using IntSeries = std::vector<Integer>;

/// Coefficients of prod_{n>=1} (1 - X^n)^{-a_n} up to degree N, via
/// b_n = (1/n) sum_{k=1}^n c_k b_{n-k} with c_k = sum_{d|k} d a_d.
inline IntSeries euler_transform(const IntSeries& a, int N) {
  if (N < 0) throw std::invalid_argument("negative degree");
  auto coeff = [&](int d) { return d < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(d)] : Integer(0); };
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1, 0);
  for (int d = 1; d <= N; ++d) {
    const Integer ad = coeff(d);
    if (ad == 0) continue;
    for (int k = d; k <= N; k += d) c[static_cast<std::size_t>(k)] += d * ad;
  }
  IntSeries b(static_cast<std::size_t>(N) + 1, 0);
  b[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Integer s = 0;
    for (int k = 1; k <= n; ++k) s += c[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    b[static_cast<std::size_t>(n)] = s / n;
  }
  return b;
}

inline IntSeries forest_series(const IntSeries& tree_counts, int N) {
  if (!tree_counts.empty() && tree_counts[0] != 0) throw std::invalid_argument("tree series must vanish at degree 0");
  return euler_transform(tree_counts, N);
}

namespace detail {

// t(n) = D * [X^{n-1}] prod_k (1 - X^k)^{-w t(k)}, one degree at a time so the
// Euler product only ever needs coefficients already known.
inline IntSeries rooted_series(int D, int weight, int N) {
  IntSeries t(static_cast<std::size_t>(N) + 1, 0);
  if (N < 1) return t;
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1, 0);  // c_k = sum_{d|k} d * weight * t(d)
  IntSeries b(static_cast<std::size_t>(N) + 1, 0);             // Euler product of weight * t
  b[0] = 1;
  for (int n = 1; n <= N; ++n) {
    if (n >= 2) {
      const int m = n - 1;
      Integer s = 0;
      for (int k = 1; k <= m; ++k) s += c[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)];
      b[static_cast<std::size_t>(m)] = s / m;
    }
    t[static_cast<std::size_t>(n)] = D * b[static_cast<std::size_t>(n - 1)];
    const Integer wn = weight * t[static_cast<std::size_t>(n)];
    for (int k = n; k <= N; k += n) c[static_cast<std::size_t>(k)] += n * wn;
  }
  return t;
}

}  // namespace detail

/// t_{D,T}(0..N) from T(X) = D X F(X)^T and F = Euler transform of T(X).
inline IntSeries tree_series(int D, int T, int N) {
  if (D < 1 || T < 1) throw std::invalid_argument("D and T must be positive");
  return detail::rooted_series(D, T, N);
}

/// t'_{D,T}(0..N): trees with no root edge of one fixed type, D X F(X)^{T-1}.
inline IntSeries restricted_tree_series(int D, int T, int N) {
  if (D < 1 || T < 1) throw std::invalid_argument("D and T must be positive");
  const IntSeries t = tree_series(D, T, N);
  IntSeries scaled(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) scaled[i] = (T - 1) * t[i];
  const IntSeries f = euler_transform(scaled, N);
  IntSeries r(static_cast<std::size_t>(N) + 1, 0);
  for (int n = 1; n <= N; ++n) r[static_cast<std::size_t>(n)] = D * f[static_cast<std::size_t>(n - 1)];
  return r;
}

// Closed polynomial forms.

class UnknownSymbol : public std::runtime_error {
 public:
  explicit UnknownSymbol(const std::string& name)
      : std::runtime_error("unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Evaluates arithmetic over rationals: + - * / ^, parentheses, integer
/// literals, single-letter variables and implicit multiplication ("3D^2T").
inline Rational evaluate_formula(std::string_view text, const std::map<char, Rational>& vars) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto peek = [&]() -> char {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto bad = [&](const std::string& msg) -> std::invalid_argument {
    return std::invalid_argument(msg + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };

  auto expr = [&](auto&& self) -> Rational {
    auto atom = [&]() -> Rational {
      const char c = peek();
      if (c == '(') {
        ++pos;
        Rational v = self(self);
        if (peek() != ')') throw bad("expected ')'");
        ++pos;
        return v;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return Rational(Integer(std::string(text.substr(start, pos - start))));
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        ++pos;
        auto it = vars.find(c);
        if (it == vars.end()) throw UnknownSymbol(std::string(1, c));
        return it->second;
      }
      throw bad("unexpected character");
    };
    auto power = [&]() -> Rational {
      Rational base = atom();
      if (peek() == '^') {
        ++pos;
        const Rational e = atom();
        if (e.get_den() != 1 || e < 0) throw bad("exponent must be a nonnegative integer");
        Rational r = 1;
        for (Integer i = 0; i < e.get_num(); ++i) r *= base;
        return r;
      }
      return base;
    };
    auto unary = [&](auto&& un) -> Rational {
      if (peek() == '-') {
        ++pos;
        return -un(un);
      }
      return power();
    };
    auto term = [&]() -> Rational {
      Rational v = unary(unary);
      for (;;) {
        const char c = peek();
        if (c == '*') {
          ++pos;
          v *= unary(unary);
        } else if (c == '/') {
          ++pos;
          const Rational d = unary(unary);
          if (d == 0) throw bad("division by zero");
          v /= d;
        } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
          v *= power();
        } else {
          return v;
        }
      }
    };
    Rational v = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos;
        v += term();
      } else if (c == '-') {
        ++pos;
        v -= term();
      } else {
        return v;
      }
    }
  };
  Rational v = expr(expr);
  if (peek() != '\0') throw bad("trailing input");
  return v;
}

struct ClosedForm {
  int n;
  std::string printed;    // as published
  std::string corrected;  // consistent with t_{D,T}(n) = t_{TD,1}(n)/T
};

inline const std::vector<ClosedForm>& tree_closed_forms() {
  static const std::vector<ClosedForm> forms = {
      {1, "D", "D"},
      {2, "D^2t", "D^2T"},
      {3, "D^2T(3D+1)/2", "D^2T(3DT+1)/2"},
      {4, "D^2T(8S^2T^2+3DT+1)/3", "D^2T(8D^2T^2+3DT+1)/3"},
      {5, "D^2T(125D^3T^3+54D^2T^2+31DT+6)/24", "D^2T(125D^3T^3+54D^2T^2+31DT+6)/24"},
      {6, "D^2T(162D^4T^4+80D^3T^3+45D^2T^2+10DT+3)/15", "D^2T(162D^4T^4+80D^3T^3+45D^2T^2+10DT+3)/15"},
      {7, "D^2T(16807D^5T^5+9375D^4T^4+5395D^3T^3+2025D^2T^2+838DT+120)/720",
       "D^2T(16807D^5T^5+9375D^4T^4+5395D^3T^3+2025D^2T^2+838DT+120)/720"},
  };
  return forms;
}

inline const std::vector<ClosedForm>& restricted_closed_forms() {
  static const std::vector<ClosedForm> forms = {
      {1, "D", "D"},
      {2, "D^2(T-1)", "D^2(T-1)"},
      {3, "D^2(T-1)(3DT-D+1)/2", "D^2(T-1)(3DT-D+1)/2"},
      {4, "D^2(T-1)(16D^2T^2-8D^2T+D^2+6DT-3D+2)/6", "D^2(T-1)(16D^2T^2-8D^2T+D^2+6DT-3D+2)/6"},
  };
  return forms;
}

class FormulaDiscrepancy : public std::runtime_error {
 public:
  FormulaDiscrepancy(int n, int D, int T, const std::string& detail)
      : std::runtime_error("formula discrepancy at n=" + std::to_string(n) + ", D=" + std::to_string(D) +
                           ", T=" + std::to_string(T) + ": " + detail),
        n_(n),
        D_(D),
        T_(T) {}
  int n() const { return n_; }
  int D() const { return D_; }
  int T() const { return T_; }

 private:
  int n_, D_, T_;
};

namespace detail {

inline const ClosedForm& closed_form_at(const std::vector<ClosedForm>& forms, int n) {
  for (const auto& f : forms)
    if (f.n == n) return f;
  throw std::out_of_range("no closed form for n=" + std::to_string(n));
}

inline std::map<char, Rational> dt_vars(int D, int T) { return {{'D', Rational(D)}, {'T', Rational(T)}}; }

}  // namespace detail

/// Value of the corrected closed form for t_{D,T}(n); throws
/// FormulaDiscrepancy if it disagrees with the series.
inline Integer closed_form_check(int D, int T, int n) {
  const auto& form = detail::closed_form_at(tree_closed_forms(), n);
  const Rational v = evaluate_formula(form.corrected, detail::dt_vars(D, T));
  const Integer expected = tree_series(D, T, n)[static_cast<std::size_t>(n)];
  if (v != Rational(expected)) {
    throw FormulaDiscrepancy(n, D, T, form.corrected + " gives " + to_string(v) + ", series gives " + to_string(expected));
  }
  return expected;
}

struct DiscrepancyEntry {
  int n;
  int D;
  int T;
  std::string formula;
  std::string reason;
};

/// Checks each printed form against `series_of(D,T)` on the grid; reports the
/// first failing grid point per formula.
template <class SeriesOf>
std::vector<DiscrepancyEntry> discrepancy_report(const std::vector<ClosedForm>& forms,
                                                 const std::vector<std::pair<int, int>>& grid, SeriesOf series_of) {
  std::vector<DiscrepancyEntry> out;
  for (const auto& form : forms) {
    for (auto [D, T] : grid) {
      const Integer expected = series_of(D, T, form.n)[static_cast<std::size_t>(form.n)];
      std::optional<std::string> reason;
      try {
        const Rational v = evaluate_formula(form.printed, detail::dt_vars(D, T));
        if (v != Rational(expected)) reason = "evaluates to " + to_string(v) + ", expected " + to_string(expected);
      } catch (const UnknownSymbol& e) {
        reason = e.what();
      }
      if (reason) {
        out.push_back({form.n, D, T, form.printed, *reason});
        break;
      }
    }
  }
  return out;
}

inline std::vector<std::pair<int, int>> square_grid(int max) {
  std::vector<std::pair<int, int>> g;
  for (int D = 1; D <= max; ++D)
    for (int T = 1; T <= max; ++T) g.emplace_back(D, T);
  return g;
}

inline std::vector<DiscrepancyEntry> tree_discrepancy_report(int grid_max = 3) {
  return discrepancy_report(tree_closed_forms(), square_grid(grid_max), tree_series);
}

inline std::vector<DiscrepancyEntry> restricted_discrepancy_report(int grid_max = 3) {
  return discrepancy_report(restricted_closed_forms(), square_grid(grid_max), restricted_tree_series);
}

}  // namespace typedtrees
