#pragma once

#include <map>
#include <string>
#include <vector>

#include "cisys/liealg.hpp"
#include "cisys/mpoly.hpp"
#include "cisys/uea.hpp"

namespace cisys {

/// Exponential coordinates n-bar(x) = exp(sum_i x_i B_i) over the n-bar basis
/// B_i (basis positions 0..n-1, so the last coordinate is the central z).
/// Polynomials live in n + 1 variables; variable n is the parameter s.
struct NbarCoords {
  explicit NbarCoords(const LieAlgebra& L);
  std::size_t n = 0;
  std::size_t nvars() const { return n + 1; }
  std::size_t s_var() const { return n; }
  std::vector<std::string> names;  // names[n] == "s"
  std::string name(std::size_t k) const { return names.at(k); }
  MPoly from_upoly(const UPoly& p) const;
};

/// Element of g with polynomial coefficients.
class PolyElement {
 public:
  PolyElement() = default;
  explicit PolyElement(std::size_t nvars) : nvars_(nvars) {}
  static PolyElement constant(std::size_t nvars, const Element& e);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::size_t, MPoly>& terms() const { return c_; }
  MPoly coeff(std::size_t i) const;
  void add_term(std::size_t i, const MPoly& p);
  PolyElement& operator+=(const PolyElement& o);
  PolyElement& operator*=(const Rational& k);
  friend bool operator==(const PolyElement& a, const PolyElement& b) { return a.c_ == b.c_; }

 private:
  std::size_t nvars_ = 0;
  std::map<std::size_t, MPoly> c_;
};

PolyElement poly_bracket(const LieAlgebra& L, const PolyElement& a, const PolyElement& b);

/// e^{-ad W} Y with W = sum_i x_i B_i; terminates by nilpotency.
PolyElement ad_exp_inverse(const LieAlgebra& L, const Element& Y);
PolyElement ad_exp_inverse(const LieAlgebra& L, const NbarCoords& X, const Element& Y);

/// Derivative multi-index over the n coordinates.
using MultiIndex = Exponents;

/// sum_alpha a_alpha(x, s) d^alpha.
class PolyDiffOp {
 public:
  PolyDiffOp() = default;
  explicit PolyDiffOp(std::size_t ncoords) : n_(ncoords) {}
  static PolyDiffOp identity(std::size_t ncoords);
  static PolyDiffOp multiplication(std::size_t ncoords, const MPoly& f);
  static PolyDiffOp partial(std::size_t ncoords, std::size_t k);

  std::size_t ncoords() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<MultiIndex, MPoly>& terms() const { return t_; }
  MPoly coeff(const MultiIndex& a) const;
  void add_term(const MultiIndex& a, const MPoly& f);
  /// Highest derivative order; -1 for the zero operator.
  int order() const;
  std::size_t size() const { return t_.size(); }

  PolyDiffOp& operator+=(const PolyDiffOp& o);
  PolyDiffOp& operator-=(const PolyDiffOp& o);
  PolyDiffOp& operator*=(const MPoly& f);  // left multiplication by a function
  PolyDiffOp& operator*=(const Rational& k);
  friend PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b) { return a += b; }
  friend PolyDiffOp operator-(PolyDiffOp a, const PolyDiffOp& b) { return a -= b; }
  friend bool operator==(const PolyDiffOp& a, const PolyDiffOp& b) { return a.t_ == b.t_; }

  /// Applies the operator to a polynomial.
  MPoly apply(const MPoly& f) const;
  PolyDiffOp specialize_s(const Rational& s0) const;
  std::string str(const NbarCoords& X) const;

 private:
  std::size_t n_ = 0;
  std::map<MultiIndex, MPoly> t_;
};

/// a o b.
PolyDiffOp compose(const PolyDiffOp& a, const PolyDiffOp& b);
PolyDiffOp op_commutator(const PolyDiffOp& a, const PolyDiffOp& b);

/// f -> (D f)(e) as multi-index -> coefficient in s.
struct PointFunctional {
  std::map<MultiIndex, UPoly> terms;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const PointFunctional&, const PointFunctional&) = default;
  /// gcd of all coefficients; zero polynomial iff the functional vanishes identically in s.
  UPoly condition() const;
  PointFunctional at(const Rational& s0) const;
  std::string str(const NbarCoords& X) const;
};

PointFunctional eval_at_identity(const PolyDiffOp& a);

/// The right action R and the realization Pi_s on polynomials over N-bar.
class WeylRealization {
 public:
  explicit WeylRealization(const LieAlgebra& L);
  const LieAlgebra& algebra() const { return *L_; }
  const NbarCoords& coords() const { return X_; }

  /// R(B_i) = sum_j (B_i + 1/2 [W, B_i])_j d_j.
  const PolyDiffOp& r_generator(std::size_t i) const { return gens_.at(i); }
  /// R of a U(n-bar) element, with R(uv) = R(u) o R(v).
  PolyDiffOp r_op(const PBWElement& u) const;
  /// R of an n-bar valued polynomial element (pointwise).
  PolyDiffOp r_field(const PolyElement& v) const;
  /// Pi_s(Y) = -s dchi((e^{-ad W} Y)_q) - R((e^{-ad W} Y)_nbar).
  PolyDiffOp pi_op(const Element& Y) const;
  PolyDiffOp pi_op(std::size_t i) const;

 private:
  const LieAlgebra* L_;
  NbarCoords X_;
  std::vector<PolyDiffOp> gens_;
  std::vector<PolyDiffOp> pi_;
};

PolyDiffOp r_op(const LieAlgebra& L, const PBWElement& u);
PolyDiffOp pi_op(const LieAlgebra& L, const Element& Y);

}  // namespace cisys
