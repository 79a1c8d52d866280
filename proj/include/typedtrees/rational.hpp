#pragma once

// Exact scalars: arbitrary-precision integers and reduced rationals (GMP).

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace typedtrees {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Renders as `p/q`, omitting `/q` when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace typedtrees
