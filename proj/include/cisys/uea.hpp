#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cisys/liealg.hpp"
#include "cisys/upoly.hpp"

namespace cisys {

/// A PBW monomial stored as its non-decreasing word of basis positions,
/// e.g. X_0^2 X_3 is {0, 0, 3}.
using Word = std::vector<std::uint16_t>;

/// Graded lexicographic order: degree first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of U(g) in PBW normal form with coefficients in Q[s].
class PBWElement {
 public:
  using Terms = std::map<Word, UPoly, WordOrder>;

  PBWElement() = default;
  static PBWElement one() { return monomial({}, 1); }
  static PBWElement monomial(Word w, const UPoly& c = 1);
  static PBWElement generator(std::size_t i) { return monomial(Word{static_cast<std::uint16_t>(i)}); }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  /// Filtration degree (length of the longest word); -1 for zero.
  int degree() const;
  UPoly coeff(const Word& w) const;

  /// Adds c * m; m must already be a non-decreasing word.
  void add_term(const Word& m, const UPoly& c);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  PBWElement& operator*=(const UPoly& k);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const UPoly& k, PBWElement a) { return a *= k; }
  friend bool operator==(const PBWElement&, const PBWElement&) = default;

  /// Substitutes s = s0 in every coefficient.
  PBWElement at(const Rational& s0) const;
  bool depends_on_s() const;

 private:
  Terms t_;
};

/// Normal ordering and multiplication in U(g) for a fixed Chevalley basis,
/// by the rewriting x y = y x + [x, y] for adjacent inversions.
class Enveloping {
 public:
  explicit Enveloping(const LieAlgebra& L) : L_(&L) {}
  const LieAlgebra& algebra() const { return *L_; }

  PBWElement normal_order(std::span<const std::size_t> word) const;
  PBWElement multiply(const PBWElement& a, const PBWElement& b) const;
  /// x * a for a basis vector x.
  PBWElement left_multiply(std::size_t x, const PBWElement& a) const;
  /// y * a for a Lie algebra element y.
  PBWElement left_multiply(const Element& y, const PBWElement& a) const;
  PBWElement right_multiply(const PBWElement& a, std::size_t x) const;

  /// Stable text such as "(2*s + 1)*X[-0100]^2*X[-1211] - 3*H[2]".
  std::string str(const PBWElement& a) const;
  /// ad(h)-weight of a monomial as a lattice vector over the simple roots.
  std::vector<int> weight(const Word& w) const;
  /// ad(H_gamma) eigenvalue of a monomial.
  int grade(const Word& w) const;

 private:
  PBWElement lmul_word(std::size_t x, const Word& w) const;
  PBWElement rmul_word(const Word& w, std::size_t x) const;
  const LieAlgebra* L_;
};

PBWElement normal_order(const LieAlgebra& L, std::span<const std::size_t> word);
PBWElement multiply(const LieAlgebra& L, const PBWElement& a, const PBWElement& b);

/// All non-decreasing words of length <= max_degree over the given positions.
std::vector<Word> enumerate_monomials(const std::vector<std::size_t>& generators, int max_degree);

/// Positions of the n-bar block of L, in basis order.
std::vector<std::size_t> nbar_generators(const LieAlgebra& L);

}  // namespace cisys
