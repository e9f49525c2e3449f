#include "doctest.h"

#include "cisys/error.hpp"
#include "cisys/liealg.hpp"

using namespace cisys;

namespace {

LieAlgebra make(Family f, int r) { return build_chevalley(build_root_system({f, r})); }

}  // namespace

TEST_CASE("dimensions and Heisenberg grading") {
  struct Case {
    Family f;
    int r;
    std::size_t dim;
    std::array<std::size_t, 5> dims;
  };
  // g_0 = Cartan + roots orthogonal to the highest root; g_{+-2} = span X_{+-gamma}.
  const Case cases[] = {
      {Family::D, 4, 28, {1, 8, 10, 8, 1}},
      {Family::D, 5, 45, {1, 12, 19, 12, 1}},
      {Family::A, 3, 15, {1, 4, 5, 4, 1}},
      {Family::E, 6, 78, {1, 20, 36, 20, 1}},
  };
  for (const auto& c : cases) {
    auto L = make(c.f, c.r);
    CHECK(L.dim() == c.dim);
    auto h = heisenberg_grading(L);
    CHECK(h.dims() == c.dims);
    CHECK(L.nbar_end() - L.nbar_begin() == c.dims[0] + c.dims[1]);
    CHECK(L.n_end() - L.n_begin() == c.dims[3] + c.dims[4]);
    // X_{-gamma} closes the n-bar block.
    CHECK(L.basis(L.nbar_end() - 1).root == -L.gamma());
  }
}

TEST_CASE("Chevalley normalizations and Jacobi") {
  for (auto [f, r] : {std::pair{Family::A, 3}, std::pair{Family::D, 4}, std::pair{Family::D, 5}}) {
    auto L = make(f, r);
    CHECK(check_normalizations(L).empty());
    CHECK(check_jacobi_exhaustive(L).empty());
  }
}

TEST_CASE("invariant form") {
  auto L = make(Family::D, 4);
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element x = Element::basis(i), y = Element::basis(j);
      CHECK(L.killing(x, y) == L.killing(y, x));
      for (std::size_t k = 0; k < n; ++k) {
        const Element z = Element::basis(k);
        CHECK(L.killing(L.bracket(x, y), z) == L.killing(x, L.bracket(y, z)));
      }
    }
}

TEST_CASE("dchi is a character of l") {
  auto L = make(Family::D, 4);
  for (std::size_t i = L.levi_begin(); i < L.levi_end(); ++i) {
    for (std::size_t j = L.levi_begin(); j < L.levi_end(); ++j)
      CHECK(L.dchi(L.bracket_basis(i, j)) == 0);
  }
  CHECK(L.dchi(L.coroot(L.gamma())) == 2);
  CHECK_THROWS_AS(L.dchi(Element::basis(L.nbar_begin())), DomainError);
}

TEST_CASE("deleted Dynkin diagrams") {
  CHECK(deleted_dynkin(make(Family::D, 4)).str() == "{a1} {a3} {a4}");
  CHECK(deleted_dynkin(make(Family::D, 5)).str() == "{a1} {a3,a4,a5}");
  CHECK(deleted_dynkin(make(Family::A, 3)).str() == "{a2}");
  CHECK(deleted_dynkin(make(Family::E, 6)).str() == "{a1,a3,a4,a5,a6}");
}

TEST_CASE("V+ is an irreducible l-module for D and E") {
  for (auto [f, r] : {std::pair{Family::D, 4}, std::pair{Family::D, 5}, std::pair{Family::E, 6}}) {
    auto L = make(f, r);
    auto h = heisenberg_grading(L);
    for (std::size_t p : h.grade(1)) CHECK(generated_levi_module_dim(L, Element::basis(p)) == h.grade(1).size());
  }
}

TEST_CASE("component projections sum to the identity on l") {
  auto L = make(Family::D, 5);
  auto dd = deleted_dynkin(L);
  for (std::size_t i = L.levi_begin(); i < L.levi_end(); ++i) {
    const Element z = Element::basis(i);
    Element sum;
    for (const auto& c : dd.components) sum += project_to_component(L, c, z);
    // The remainder is central in l and lies in the span of H_gamma.
    const Element rest = z - sum;
    for (std::size_t j = L.levi_begin(); j < L.levi_end(); ++j) CHECK(L.bracket(rest, Element::basis(j)).is_zero());
  }
}

TEST_CASE("table json round trip and hash") {
  auto L = make(Family::D, 4);
  auto j = L.table_json();
  auto back = lie_algebra_from_json(j);
  CHECK(back.table_hash() == L.table_hash());
  CHECK(back.table_text() == L.table_text());
  j["brackets"][0][3] = "12345";
  CHECK_THROWS(lie_algebra_from_json(j));
}
