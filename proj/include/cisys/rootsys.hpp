#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cisys/linalg.hpp"
#include "cisys/rational.hpp"

namespace cisys {

enum class Family { A, D, E };

/// Cartan type of a simply-laced simple Lie algebra, e.g. D4.
struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A3", "D4", "E6" etc. Throws SpecError on anything else.
  static RootSystemSpec parse(const std::string& text);
  void validate() const;
  std::string name() const;
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// A root written in the simple-root basis. Positive roots have all
/// coordinates >= 0, negative roots all <= 0.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  bool is_zero() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
  /// Compact label: "1211" for positive, "-1211" for negative roots.
  std::string label() const;
};

/// Orders positive roots by height, then lexicographically by coordinates.
bool height_lex_less(const Root& a, const Root& b);

class RootSystem {
 public:
  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  /// Bourbaki-numbered simple roots (index 0 is alpha_1).
  const std::vector<Root>& simples() const { return simples_; }
  /// Positive roots sorted by height_lex_less.
  const std::vector<Root>& positives() const { return positives_; }
  /// Positive roots followed by their negatives in the same order.
  const std::vector<Root>& all_roots() const { return all_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Gram matrix (alpha_i, alpha_j), normalized so every root has length^2 = 2.
  const Matrix& gram() const { return gram_; }

  bool contains(const Root& r) const { return index_.count(r) != 0; }
  /// Index in all_roots(); throws DomainError for non-roots.
  std::size_t index_of(const Root& r) const;

  /// (a, b); throws DomainError if either is not a root.
  Rational inner(const Root& a, const Root& b) const;
  /// The form on arbitrary lattice vectors, no membership check.
  int lattice_inner(const std::vector<int>& a, const std::vector<int>& b) const;
  /// s_a(b) = b - (b, a) a.
  Root reflect(const Root& a, const Root& b) const;

  nlohmann::json to_json() const;

  friend RootSystem build_root_system(const RootSystemSpec& spec);

 private:
  RootSystemSpec spec_;
  std::vector<std::vector<int>> cartan_;
  Matrix gram_;
  std::vector<Root> simples_, positives_, all_;
  std::map<Root, std::size_t> index_;
};

/// Generates all roots by closing the simple roots under simple reflections.
RootSystem build_root_system(const RootSystemSpec& spec);
RootSystem root_system_from_json(const nlohmann::json& j);

/// The unique root of maximal height.
Root highest_root(const RootSystem& rs);
Rational root_inner(const RootSystem& rs, const Root& a, const Root& b);

/// Classical |Delta| for the family and rank.
std::size_t classical_root_count(const RootSystemSpec& spec);

}  // namespace cisys
