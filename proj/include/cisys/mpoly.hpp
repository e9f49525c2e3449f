#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cisys/rational.hpp"
#include "cisys/upoly.hpp"

namespace cisys {

/// Exponent vector of a monomial; index k is the power of variable k.
using Exponents = std::vector<std::uint8_t>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored. The variable count is fixed at
/// construction and every operand of a binary operation must agree on it.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t k, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  /// Largest power of variable k that occurs.
  int degree_in(std::size_t k) const;

  void add_term(const Exponents& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& k);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& k) { return a *= k; }
  friend MPoly operator*(const Rational& k, MPoly a) { return a *= k; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// d^order / dx_k^order.
  MPoly derivative(std::size_t k, int order = 1) const;
  /// Mixed partial derivative with multi-index `alpha` (length <= nvars).
  MPoly derivative(const Exponents& alpha) const;

  /// Substitutes x_k = value.
  MPoly substitute(std::size_t k, const Rational& value) const;
  /// Sets every variable with index < count to zero.
  MPoly zero_prefix(std::size_t count) const;
  /// Reads the polynomial as univariate in variable k; other variables must not occur.
  UPoly to_upoly(std::size_t k) const;

  /// Text with variable names from `name`; term order is the map order.
  std::string str(const std::function<std::string(std::size_t)>& name) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace cisys
