#pragma once

#include <gmpxx.h>

#include <string>

namespace cisys {

using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a" or "a/b"; the result is canonicalized.
inline Rational parse_rational(const std::string& text) {
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

}  // namespace cisys
