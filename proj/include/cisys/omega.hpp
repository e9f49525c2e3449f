#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cisys/verma.hpp"
#include "cisys/weylreal.hpp"

namespace cisys {

enum class Status { Pass, Fail, Skipped };
std::string status_str(Status s);
Status parse_status(const std::string& s);

/// One verification outcome.
struct CheckResult {
  std::string name;
  std::string identity;  // the verified statement in this library's notation
  Status status = Status::Skipped;
  std::string witness;
  double wall_time = 0;
  nlohmann::json data = nlohmann::json::object();
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// omega2 and omega3 in U(n-bar). V+ is indexed by eps in basis order; the
/// matching V- basis vector is X_{-eps}.
class OmegaSystem {
 public:
  explicit OmegaSystem(const LieAlgebra& L);
  const LieAlgebra& algebra() const { return *L_; }
  const Enveloping& enveloping() const { return U_; }
  const std::vector<std::size_t>& vplus() const { return vplus_; }
  const std::vector<std::size_t>& vminus() const { return vminus_; }

  /// N_{b,b'} with [X_b, X_{gamma-b}] = N X_gamma.
  Rational n_coeff(std::size_t b) const;
  /// M_{a,b'}(Z): coefficient of X_{b'} in [Z, X_a], for X_a, X_{b'} in V+.
  Rational m_coeff(std::size_t a, std::size_t bprime, const Element& Z) const;

  /// -1/2 sum_{a,b} N_{b,b'} M_{a,b'}(Z) (X_-a X_-b + X_-b X_-a)/2. Throws DomainError off l.
  PBWElement omega2(const Element& Z) const;
  /// omega2 of the projection of Z onto the ideal of [l,l] for one deleted-diagram component.
  PBWElement omega2_component(const std::vector<int>& component, const Element& Z) const;
  /// sum_eps X_-eps omega2([X_eps, Y]). Throws DomainError off V-.
  PBWElement omega3(const Element& Y) const;
  /// sum_i W_i^* omega2([W_i, Y]) for a basis W of V+ and its form-dual basis of V-.
  PBWElement omega3_with_basis(const Element& Y, const std::vector<Element>& W, const std::vector<Element>& Wdual) const;

  /// Generators omega3(X_-eps) in V+ order.
  SubmoduleCandidate omega3_span() const;

 private:
  const LieAlgebra* L_;
  Enveloping U_;
  std::vector<std::size_t> vplus_, vminus_;
  std::vector<PBWElement> omega2_basis_;  // indexed by levi position - levi_begin
};

/// Operator forms Omega2(Z) and Omega3~(Y) built directly from compositions of R.
class OmegaOperators {
 public:
  OmegaOperators(const OmegaSystem& sys, const WeylRealization& W);
  const OmegaSystem& system() const { return *sys_; }
  const WeylRealization& weyl() const { return *W_; }
  PolyDiffOp omega2(const Element& Z) const;
  PolyDiffOp omega3(const Element& Y) const;
  /// Omega3~(X_-eps) for eps in V+ order.
  const std::vector<PolyDiffOp>& omega3_basis() const { return omega3_; }

 private:
  const OmegaSystem* sys_;
  const WeylRealization* W_;
  std::vector<PolyDiffOp> omega2_;  // per levi position
  std::vector<PolyDiffOp> omega3_;
};

// Structure checks.
CheckResult check_chevalley(const LieAlgebra& L, bool exhaustive_jacobi);
CheckResult check_grading(const LieAlgebra& L);

// Verma-side checks. s0 is the special value found by the solver.
std::vector<CheckResult> verify_omega2(const OmegaSystem& sys, const Rational& s0);
CheckResult verify_contraction_identity(const OmegaSystem& sys);

struct SpecialValueOutcome {
  SingularValues values;
  std::optional<Rational> s_star;  // set iff exactly one rational value
  CheckResult entry;
};
SpecialValueOutcome solve_special_value(const OmegaSystem& sys, unsigned jobs);
std::vector<CheckResult> verify_omega3_module(const OmegaSystem& sys, const Rational& s0);
CheckResult verify_basis_independence(const OmegaSystem& sys, std::uint64_t seed, int trials = 5);

// Operator-side checks.
CheckResult verify_pi_homomorphism(const WeylRealization& W, unsigned jobs);
CheckResult verify_r_bracket_law(const WeylRealization& W, const Rational& s0);
CheckResult verify_omega2_operator_law(const OmegaOperators& ops, const Rational& s0, unsigned jobs);
CheckResult verify_omega3_operator_l_law(const OmegaOperators& ops, const Rational& s0);
CheckResult verify_vplus_brackets_at_e(const OmegaOperators& ops, const Rational& s0, unsigned jobs);
CheckResult verify_x_gamma_bracket(const OmegaOperators& ops, const Rational& s0);
CheckResult verify_nbar_brackets(const OmegaOperators& ops, const Rational& s0);

/// b(Y) for every basis Y of g, b(Y)_{ji} the coefficient of (Omega3~(Y_j))_e in [Pi(Y), Omega3~(Y_i)]_e.
struct ConformalData {
  std::vector<Matrix> b;
  CheckResult independence;
  CheckResult b_matrix;
};
ConformalData verify_conformal_invariance(const OmegaOperators& ops, const Rational& s0, unsigned jobs);
/// C(Y)(x) = sum_k (e^{-ad W} Y)_k(x) b(B_k), as polynomial matrices.
std::vector<std::vector<MPoly>> structure_operator(const OmegaOperators& ops, const std::vector<Matrix>& b, const Element& Y);
CheckResult verify_structure_operator(const OmegaOperators& ops, const std::vector<Matrix>& b, const Rational& s0,
                                      const std::vector<std::size_t>& sample, unsigned jobs);

// Picture consistency.
CheckResult verify_picture_consistency(const OmegaOperators& ops);
CheckResult verify_intertwining(const WeylRealization& W, int max_degree, unsigned jobs);

/// Runs the omega3 construction on a type where no system is expected.
CheckResult run_negative_control(const LieAlgebra& L, unsigned jobs);

/// Checks that u (x) e_i -> u omega3(Y_i) is g-equivariant from the induced
/// module of E = span omega3 into M(C_{s0 dchi}) on generators, and records
/// the eigenvalue gap showing the image is proper.
CheckResult verify_reducibility(const OmegaSystem& sys, const Rational& s0, int max_degree = 1);

}  // namespace cisys
