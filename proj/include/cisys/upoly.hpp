#pragma once

#include <string>
#include <vector>

#include "cisys/rational.hpp"

namespace cisys {

/// Univariate polynomial over Q in the formal parameter s.
/// Coefficients are stored lowest degree first with no trailing zeros,
/// so the zero polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UPoly(int c) : UPoly(Rational(c)) {}
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly s() { return UPoly(std::vector<Rational>{0, 1}); }
  static UPoly monomial(const Rational& c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational constant_term() const { return coeff(0); }

  Rational eval(const Rational& s0) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& k);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& k) { return a *= k; }
  friend UPoly operator*(const Rational& k, UPoly a) { return a *= k; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on division by zero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);
  UPoly monic() const;

  /// All distinct rational roots, ascending. Requires a nonzero polynomial.
  std::vector<Rational> rational_roots() const;

  /// Stable text: "3*s^2 - 1/2*s + 1"; zero prints as "0".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace cisys
