#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cisys/rational.hpp"
#include "cisys/rootsys.hpp"

namespace cisys {

/// Sparse vector over the ordered Chevalley basis (keys are basis positions).
class Element {
 public:
  Element() = default;
  static Element basis(std::size_t i, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  const std::map<std::size_t, Rational>& terms() const { return c_; }
  Rational coeff(std::size_t i) const;
  void add_term(std::size_t i, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& k);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& k, Element a) { return a *= k; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<std::size_t, Rational> c_;
};

/// Position of a basis vector in the parabolic grouping (n-bar, l, n).
enum class Block { NBar, Levi, N };

/// One basis vector: either a root vector X_alpha or a Cartan element H_{alpha_i}.
struct BasisIndex {
  enum class Kind { RootVector, Cartan };
  Kind kind = Kind::Cartan;
  Root root;      // RootVector only
  int cartan = 0; // Cartan only, 0-based simple root index
  int grade = 0;  // ad(H_gamma) eigenvalue
  Block block = Block::Levi;
  std::string label;
};

/// Immutable structure-constant table of a simply-laced simple Lie algebra in
/// a Chevalley basis with [X_a, X_-a] = H_a, [H_a, X_b] = (b, a) X_b and
/// B(X_a, X_-a) = 1. Basis order: negative-grade roots, then l (negative
/// l-roots, H_1..H_r, positive l-roots), then positive-grade roots; every root
/// block sorted by (height, lex).
class LieAlgebra {
 public:
  const RootSystem& roots() const { return rs_; }
  const Root& gamma() const { return gamma_; }
  std::size_t dim() const { return basis_.size(); }
  int rank() const { return rs_.rank(); }
  const BasisIndex& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<BasisIndex>& basis() const { return basis_; }

  /// Half-open position ranges of the three blocks.
  std::size_t nbar_begin() const { return 0; }
  std::size_t nbar_end() const { return n_nbar_; }
  std::size_t levi_begin() const { return n_nbar_; }
  std::size_t levi_end() const { return n_nbar_ + n_levi_; }
  std::size_t n_begin() const { return n_nbar_ + n_levi_; }
  std::size_t n_end() const { return dim(); }
  Block block_of(std::size_t i) const { return basis_[i].block; }

  std::size_t position(const Root& a) const;
  std::size_t cartan_position(int i) const { return cartan_pos_.at(static_cast<std::size_t>(i)); }
  Element root_vector(const Root& a) const { return Element::basis(position(a)); }
  /// H_a as the integer combination of H_{alpha_i} given by a's coordinates.
  Element coroot(const Root& a) const;

  const Element& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Element bracket(const Element& a, const Element& b) const;
  /// Normalized invariant form, B(H_a, H_b) = (a, b).
  Rational killing(const Element& a, const Element& b) const;
  /// N_{a,b} with [X_a, X_b] = N_{a,b} X_{a+b}; zero when a + b is not a root.
  Rational structure_constant(const Root& a, const Root& b) const;

  /// Character of l with dchi(H) = gamma(H); rejects elements outside l.
  Rational dchi(const Element& z) const;
  bool in_block(const Element& x, Block b) const;

  std::string element_str(const Element& x) const;
  /// Canonical listing of the nonzero brackets, one per line.
  std::string table_text() const;
  /// FNV-1a 64-bit hash of table_text().
  std::uint64_t table_hash() const;
  nlohmann::json table_json() const;

  friend LieAlgebra build_chevalley(const RootSystem& rs);
  friend LieAlgebra lie_algebra_from_json(const nlohmann::json& j);

 private:
  void layout_basis();
  void validate() const;

  RootSystem rs_;
  Root gamma_;
  std::vector<BasisIndex> basis_;
  std::vector<std::size_t> cartan_pos_;
  std::map<Root, std::size_t> root_pos_;
  std::size_t n_nbar_ = 0, n_levi_ = 0;
  std::vector<Element> table_;
};

/// Builds the Chevalley basis from an asymmetry function on the root lattice
/// and checks the normalizations and the Jacobi identity before returning.
LieAlgebra build_chevalley(const RootSystem& rs);
LieAlgebra lie_algebra_from_json(const nlohmann::json& j);

/// The five ad(H_gamma) eigenspaces for eigenvalues -2..2, as basis positions.
struct HeisenbergDecomposition {
  std::array<std::vector<std::size_t>, 5> parts;
  Root gamma;
  const std::vector<std::size_t>& grade(int k) const { return parts.at(static_cast<std::size_t>(k + 2)); }
  std::array<std::size_t, 5> dims() const;
};
HeisenbergDecomposition heisenberg_grading(const LieAlgebra& L);

Rational dchi(const LieAlgebra& L, const Element& z);
Element bracket(const LieAlgebra& L, const Element& a, const Element& b);
Rational killing(const LieAlgebra& L, const Element& a, const Element& b);

/// Connected components of the Dynkin subdiagram on simple roots orthogonal
/// to gamma. Indices are 0-based simple-root indices.
struct DeletedDiagram {
  std::vector<std::vector<int>> components;
  std::string str() const;
};
DeletedDiagram deleted_dynkin(const LieAlgebra& L);

/// Projection of Z in l onto the simple ideal l(C) of [l, l] for one
/// component C, along the center and the other ideals.
Element project_to_component(const LieAlgebra& L, const std::vector<int>& component, const Element& z);

/// Violations of (C1)-(C4) and antisymmetry over all basis pairs, as text.
std::vector<std::string> check_normalizations(const LieAlgebra& L);
/// Jacobi violations over all basis triples (i <= j <= k suffices by symmetry).
std::vector<std::string> check_jacobi_exhaustive(const LieAlgebra& L, std::size_t max_report = 5);

/// Dimension of the l-submodule generated by `seed` under ad(l).
std::size_t generated_levi_module_dim(const LieAlgebra& L, const Element& seed);

}  // namespace cisys
