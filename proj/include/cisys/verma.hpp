#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cisys/linalg.hpp"
#include "cisys/uea.hpp"

namespace cisys {

/// u (x) 1 in M(C_{s dchi}) = U(g) (x)_{U(q)} C_{s dchi}; the body is a PBW
/// element supported on n-bar monomials.
struct VermaElement {
  PBWElement body;
  friend bool operator==(const VermaElement&, const VermaElement&) = default;
};

struct SubmoduleCandidate {
  std::vector<VermaElement> generators;
  std::string label;
};

/// The g-action on M(C_{s dchi}) with s kept symbolic.
class VermaModule {
 public:
  explicit VermaModule(const LieAlgebra& L) : U_(L) {}
  const LieAlgebra& algebra() const { return U_.algebra(); }
  const Enveloping& enveloping() const { return U_; }

  /// Sends a normally ordered U(g) element to its image u (x) 1: monomials
  /// with an n factor vanish, each l factor contributes s*dchi(factor).
  PBWElement project(const PBWElement& u) const;
  VermaElement act(std::size_t x, const VermaElement& m) const;
  VermaElement act(const Element& x, const VermaElement& m) const;
  /// Action of a U(g) word applied right to left: word[0] acts last.
  VermaElement act_word(const std::vector<std::size_t>& word, const VermaElement& m) const;
  std::string str(const VermaElement& m) const { return U_.str(m.body); }

 private:
  Enveloping U_;
};

VermaElement act(const LieAlgebra& L, const Element& x, const VermaElement& m);

/// Positions of the q = l + n basis.
std::vector<std::size_t> q_basis(const LieAlgebra& L);

/// Answer of the singular-value solver.
struct SingularValues {
  bool all = false;
  std::vector<Rational> values;  // sorted; meaningful when !all
  /// gcd of all residual conditions (zero polynomial when all s work).
  UPoly condition;
  /// First (x, generator) pair whose residual is not identically zero.
  std::string witness;
  bool contains(const Rational& s0) const;
  std::string str() const;
};

/// Rational s0 for which span(F) is stable under q at s = s0.
/// Generators must have s-independent coefficients and be linearly independent.
SingularValues singular_values(const LieAlgebra& L, const SubmoduleCandidate& F, unsigned jobs = 1);

/// The matrix a(x) with x f_i = sum_r a(x)_{ri} f_r at s = s0. Throws
/// DomainError if s0 is not a singular value and WitnessError if x f_i leaves the span.
Matrix module_action_matrix(const LieAlgebra& L, const SubmoduleCandidate& F, const Element& x, const Rational& s0);

/// a(x) for every x in q_basis(L), with one stability check at s0.
std::vector<Matrix> q_action_matrices(const LieAlgebra& L, const SubmoduleCandidate& F, const Rational& s0);

/// Row-reduced form of an s-independent span used to split elements into
/// a span part and a residual.
class SpanReducer {
 public:
  explicit SpanReducer(const std::vector<PBWElement>& generators);
  std::size_t rank() const { return rows_.size(); }
  /// Residual of e against the span (zero iff e lies in it, coefficientwise in s).
  PBWElement residual(const PBWElement& e) const;
  /// Coordinates of e (s-free) over the original generators, if e is in the span.
  std::optional<std::vector<Rational>> coordinates(const PBWElement& e) const;

 private:
  std::vector<Word> cols_;
  std::vector<PBWElement> rows_;  // RREF rows, pivot monomial first in pivots_
  std::vector<Word> pivots_;
  Matrix gens_t_;                 // monomial x generator matrix
};

/// The parabolically induced module U(g) (x)_{U(q)} E for a finite-dimensional
/// q-module E given by matrices on the q basis. Elements are tuples of n-bar
/// bodies, one per basis vector of E.
class InducedModule {
 public:
  /// `q_matrices[k]` is the matrix of q_basis(L)[k] on E.
  InducedModule(const LieAlgebra& L, std::vector<Matrix> q_matrices);
  std::size_t fiber_dim() const { return dim_; }
  std::vector<PBWElement> act(std::size_t x, const std::vector<PBWElement>& v) const;

 private:
  Enveloping U_;
  std::vector<Matrix> a_;        // indexed by basis position; empty for n-bar
  std::size_t dim_;
};

}  // namespace cisys
