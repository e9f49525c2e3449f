#include "doctest.h"

#include <random>

#include "cisys/error.hpp"
#include "cisys/verma.hpp"

using namespace cisys;

namespace {

const LieAlgebra& d4() {
  static const LieAlgebra L = build_chevalley(build_root_system({Family::D, 4}));
  return L;
}

// Independent oracle. Left multiplication in U(n-bar) uses only that
// [n-bar, n-bar] lies in the span of the central last generator.
PBWElement nbar_lmul(const LieAlgebra& L, std::size_t y, const Word& w) {
  if (w.empty() || y <= w.front()) {
    Word m{static_cast<std::uint16_t>(y)};
    m.insert(m.end(), w.begin(), w.end());
    return PBWElement::monomial(m);
  }
  const Word rest(w.begin() + 1, w.end());
  PBWElement out;
  const PBWElement head = nbar_lmul(L, y, rest);
  for (const auto& [m, c] : head.terms()) {
    PBWElement t = nbar_lmul(L, w.front(), m);
    t *= c;
    out += t;
  }
  for (const auto& [k, c] : L.bracket_basis(y, w.front()).terms()) {
    Word m = rest;
    m.push_back(static_cast<std::uint16_t>(k));  // central and last in the order
    out.add_term(m, UPoly(c));
  }
  return out;
}

// x (Y1 rest) (x) 1 = Y1 (x rest (x) 1) + [x, Y1] rest (x) 1
PBWElement oracle_act(const LieAlgebra& L, std::size_t x, const Word& w) {
  if (w.empty()) {
    switch (L.block_of(x)) {
      case Block::NBar: return PBWElement::generator(x);
      case Block::N: return {};
      case Block::Levi: return PBWElement::monomial({}, UPoly::s() * L.dchi(Element::basis(x)));
    }
  }
  const std::size_t y = w.front();
  const Word rest(w.begin() + 1, w.end());
  PBWElement out;
  const PBWElement inner = oracle_act(L, x, rest);
  for (const auto& [m, c] : inner.terms()) {
    PBWElement t = nbar_lmul(L, y, m);
    t *= c;
    out += t;
  }
  for (const auto& [k, c] : L.bracket_basis(x, y).terms()) {
    PBWElement t = oracle_act(L, k, rest);
    t *= UPoly(c);
    out += t;
  }
  return out;
}

VermaElement mono(const Word& w) { return {PBWElement::monomial(w)}; }

}  // namespace

TEST_CASE("action on the highest line") {
  const auto& L = d4();
  VermaModule M(L);
  const VermaElement one{PBWElement::one()};
  CHECK(M.act(L.position(L.gamma()), one).body.is_zero());
  CHECK(M.act(L.coroot(L.gamma()), one).body == PBWElement::monomial({}, UPoly::s() * Rational(2)));
  const auto h = heisenberg_grading(L);
  for (std::size_t p : h.grade(1)) {
    const Root eps = L.basis(p).root;
    const auto w = Word{static_cast<std::uint16_t>(L.position(-eps))};
    CHECK(M.act(p, mono(w)).body == PBWElement::monomial({}, UPoly::s()));
  }
}

TEST_CASE("U(g) projection agrees with the recursive oracle") {
  const auto& L = d4();
  VermaModule M(L);
  auto words = enumerate_monomials(nbar_generators(L), 2);
  std::mt19937 rng(3);
  auto cubic = enumerate_monomials(nbar_generators(L), 3);
  for (int k = 0; k < 30; ++k) words.push_back(cubic[rng() % cubic.size()]);
  for (const auto& w : words)
    for (std::size_t x = 0; x < L.dim(); ++x) CHECK(M.act(x, mono(w)).body == oracle_act(L, x, w));
}

TEST_CASE("representation property and weights") {
  const auto& L = d4();
  VermaModule M(L);
  const Enveloping& U = M.enveloping();
  auto cubic = enumerate_monomials(nbar_generators(L), 3);
  std::mt19937 rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t x = rng() % L.dim(), y = rng() % L.dim();
    const Word w = cubic[rng() % cubic.size()];
    const VermaElement m = mono(w);
    const VermaElement lhs = M.act(L.bracket_basis(x, y), m);
    PBWElement rhs = M.act(x, M.act(y, m)).body - M.act(y, M.act(x, m)).body;
    CHECK(lhs.body == rhs);

    const auto& bx = L.basis(x);
    if (bx.kind == BasisIndex::Kind::RootVector) {
      auto want = U.weight(w);
      for (std::size_t i = 0; i < want.size(); ++i) want[i] += bx.root.coords[i];
      const VermaElement xm = M.act(x, m);
      for (const auto& [m2, c] : xm.body.terms()) CHECK(U.weight(m2) == want);
    }
  }
}

TEST_CASE("n-bar acts by left multiplication") {
  const auto& L = d4();
  VermaModule M(L);
  for (const auto& w : enumerate_monomials(nbar_generators(L), 2))
    for (std::size_t y : nbar_generators(L)) CHECK(M.act(y, mono(w)).body == M.enveloping().left_multiply(y, PBWElement::monomial(w)));
}

TEST_CASE("singular values of the highest line") {
  const auto& L = d4();
  SubmoduleCandidate F{{VermaElement{PBWElement::one()}}, "highest line"};
  auto sv = singular_values(L, F);
  CHECK(sv.all);
  CHECK(sv.str() == "all s");
  const Matrix a = module_action_matrix(L, F, L.coroot(L.gamma()), Rational(3));
  CHECK(a(0, 0) == 6);
  CHECK(module_action_matrix(L, F, Element::basis(L.position(L.gamma())), 0)(0, 0) == 0);
  CHECK_THROWS_AS(module_action_matrix(L, F, Element::basis(0), 0), DomainError);
}

TEST_CASE("a single n-bar generator is never q-stable") {
  const auto& L = d4();
  SubmoduleCandidate F{{mono(Word{static_cast<std::uint16_t>(L.nbar_end() - 1)})}, "X[-gamma]"};
  auto sv = singular_values(L, F);
  CHECK_FALSE(sv.all);
  // V+ sends X_-gamma into V- for every s.
  CHECK(sv.values.empty());
  CHECK_FALSE(sv.witness.empty());
  CHECK_THROWS_AS(module_action_matrix(L, F, L.coroot(L.gamma()), Rational(1)), DomainError);
}

TEST_CASE("dependent or s-dependent generators are rejected") {
  const auto& L = d4();
  SubmoduleCandidate dep{{VermaElement{PBWElement::one()}, VermaElement{PBWElement::monomial({}, 2)}}, "dep"};
  CHECK_THROWS_AS(singular_values(L, dep), DomainError);
  SubmoduleCandidate sdep{{VermaElement{PBWElement::monomial({}, UPoly::s())}}, "sdep"};
  CHECK_THROWS_AS(singular_values(L, sdep), DomainError);
}

TEST_CASE("induced module from a character reproduces the Verma module") {
  const auto& L = d4();
  const Rational s0(-3, 2);
  std::vector<Matrix> a;
  for (std::size_t y : q_basis(L)) {
    Matrix m(1, 1);
    if (L.block_of(y) == Block::Levi) m(0, 0) = s0 * L.dchi(Element::basis(y));
    a.push_back(m);
  }
  InducedModule I(L, a);
  VermaModule M(L);
  for (const auto& w : enumerate_monomials(nbar_generators(L), 2))
    for (std::size_t x = 0; x < L.dim(); ++x)
      CHECK(I.act(x, {PBWElement::monomial(w)})[0] == M.act(x, mono(w)).body.at(s0));
}
