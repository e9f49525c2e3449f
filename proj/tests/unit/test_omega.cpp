#include "doctest.h"

#include <optional>

#include "cisys/error.hpp"
#include "cisys/omega.hpp"

using namespace cisys;

namespace {

const LieAlgebra& d4() {
  static const LieAlgebra L = build_chevalley(build_root_system({Family::D, 4}));
  return L;
}

const OmegaSystem& d4_sys() {
  static const OmegaSystem S(d4());
  return S;
}

// Oracle for w2 written straight from root data: structure_constant for N,
// a raw bracket for M, products through Enveloping::multiply.
PBWElement oracle_omega2(const LieAlgebra& L, const Element& Z) {
  const Enveloping U(L);
  const auto grading = heisenberg_grading(L);
  const std::vector<std::size_t> vp = grading.grade(1);
  PBWElement out;
  for (std::size_t a : vp)
    for (std::size_t b : vp) {
      const Root& alpha = L.basis(a).root;
      const Root& beta = L.basis(b).root;
      const Root bprime = L.gamma() - beta;
      const Rational N = L.structure_constant(beta, bprime);
      const Rational M = L.bracket(Z, Element::basis(a)).coeff(L.position(bprime));
      if (N == 0 || M == 0) continue;
      const PBWElement xa = PBWElement::generator(L.position(-alpha));
      const PBWElement xb = PBWElement::generator(L.position(-beta));
      PBWElement sym = U.multiply(xa, xb);
      sym += U.multiply(xb, xa);
      sym *= UPoly(Rational(-N * M / 4));
      out += sym;
    }
  return out;
}

PBWElement oracle_omega2_linear(const LieAlgebra& L, const Element& Z) {
  PBWElement out;
  for (const auto& [i, c] : Z.terms()) {
    PBWElement t = oracle_omega2(L, Element::basis(i));
    t *= UPoly(c);
    out += t;
  }
  return out;
}

// Ratio c with a = c b when it exists; nullopt when b = 0 and a = 0.
std::optional<Rational> proportional(const PBWElement& a, const PBWElement& b, bool& ok) {
  if (b.is_zero()) {
    ok = ok && a.is_zero();
    return std::nullopt;
  }
  const auto& [w, k] = *b.terms().begin();
  const Rational c = a.coeff(w).constant_term() / k.constant_term();
  PBWElement r = a;
  PBWElement cb = b;
  cb *= UPoly(c);
  r -= cb;
  ok = ok && r.is_zero();
  return c;
}

}  // namespace

TEST_CASE("omega2 agrees with the root-data oracle on l") {
  const LieAlgebra& L = d4();
  for (std::size_t i = L.levi_begin(); i < L.levi_end(); ++i) {
    CAPTURE(L.basis(i).label);
    CHECK(d4_sys().omega2(Element::basis(i)) == oracle_omega2(L, Element::basis(i)));
  }
}

TEST_CASE("omega2 vanishes on H_gamma and is nonzero elsewhere on the center complement") {
  const LieAlgebra& L = d4();
  CHECK(oracle_omega2_linear(L, L.coroot(L.gamma())).is_zero());
  CHECK(d4_sys().omega2(L.coroot(L.gamma())).is_zero());
  std::size_t nonzero = 0;
  for (std::size_t i = L.levi_begin(); i < L.levi_end(); ++i)
    if (!d4_sys().omega2(Element::basis(i)).is_zero()) ++nonzero;
  CHECK(nonzero >= L.levi_end() - L.levi_begin() - L.rank());
}

TEST_CASE("omega2 rejects elements outside l") {
  const LieAlgebra& L = d4();
  CHECK_THROWS_AS(d4_sys().omega2(Element::basis(L.n_begin())), DomainError);
  CHECK_THROWS_AS(d4_sys().omega3(Element::basis(L.levi_begin())), DomainError);
}

TEST_CASE("contraction constant from the oracle is the single value 2 in D4") {
  const LieAlgebra& L = d4();
  const auto grading = heisenberg_grading(L);
  const std::vector<std::size_t> vp = grading.grade(1), vm = grading.grade(-1);
  bool ok = true;
  std::optional<Rational> c;
  for (std::size_t x : vp)
    for (std::size_t y : vm) {
      const Element X = Element::basis(x), Y = Element::basis(y);
      PBWElement lhs;
      for (std::size_t e : vp) {
        const Element Xe = Element::basis(e), Xme = L.root_vector(-L.basis(e).root);
        lhs += oracle_omega2_linear(L, L.bracket(L.bracket(X, Xme), L.bracket(Xe, Y)));
      }
      const auto here = proportional(lhs, oracle_omega2_linear(L, L.bracket(X, Y)), ok);
      if (here) {
        if (c) ok = ok && *c == *here;
        c = here;
      }
    }
  CHECK(ok);
  REQUIRE(c.has_value());
  CHECK(*c == 2);
  CHECK(verify_contraction_identity(d4_sys()).status == Status::Pass);
}

TEST_CASE("omega3 agrees with the oracle and sits in H_gamma-grade -3") {
  const LieAlgebra& L = d4();
  const Enveloping U(L);
  const auto grading = heisenberg_grading(L);
  for (std::size_t y : grading.grade(-1)) {
    PBWElement want;
    for (std::size_t e : grading.grade(1)) {
      const Element bra = L.bracket(Element::basis(e), Element::basis(y));
      want += U.multiply(PBWElement::generator(L.position(-L.basis(e).root)), oracle_omega2_linear(L, bra));
    }
    const PBWElement got = d4_sys().omega3(Element::basis(y));
    CHECK(got == want);
    CHECK(!got.is_zero());
    for (const auto& [w, k] : got.terms()) {
      int g = 0;
      for (auto i : w) g += L.basis(i).grade;
      CHECK(g == -3);
      CHECK(k.degree() == 0);
    }
  }
}

TEST_CASE("n kills span{w3} exactly at s = -1") {
  const LieAlgebra& L = d4();
  const VermaModule M(L);
  const SubmoduleCandidate F = d4_sys().omega3_span();
  auto all_killed = [&](const Rational& s0) {
    for (std::size_t x = L.n_begin(); x < L.n_end(); ++x)
      for (const auto& v : F.generators)
        if (!M.act(x, v).body.at(s0).is_zero()) return false;
    return true;
  };
  CHECK(all_killed(Rational(-1)));
  CHECK_FALSE(all_killed(Rational(0)));
  CHECK_FALSE(all_killed(Rational(-2)));
  CHECK_FALSE(all_killed(Rational(1, 2)));
}

TEST_CASE("special value solver and module checks on D4") {
  const auto out = solve_special_value(d4_sys(), 1);
  REQUIRE(out.s_star.has_value());
  CHECK(*out.s_star == -1);
  CHECK(out.entry.data["bundle_index"] == "1");
  for (const auto& r : verify_omega2(d4_sys(), *out.s_star)) {
    CAPTURE(r.name);
    CAPTURE(r.witness);
    CHECK(r.status == Status::Pass);
  }
  for (const auto& r : verify_omega3_module(d4_sys(), *out.s_star)) {
    CAPTURE(r.name);
    CAPTURE(r.witness);
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("module checks fail away from the special value") {
  // At s = 0 n no longer kills w2, so the omega2 suite must report failures.
  bool any_fail = false;
  for (const auto& r : verify_omega2(d4_sys(), Rational(0)))
    if (r.status == Status::Fail) any_fail = true;
  CHECK(any_fail);
  bool o3_fail = false;
  for (const auto& r : verify_omega3_module(d4_sys(), Rational(0)))
    if (r.status == Status::Fail) o3_fail = true;
  CHECK(o3_fail);
}

TEST_CASE("randomized bases reproduce w3 for several seeds") {
  for (std::uint64_t seed : {1ull, 7ull, 12345ull}) {
    const auto r = verify_basis_independence(d4_sys(), seed, 3);
    CAPTURE(r.witness);
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("negative controls") {
  for (const char* t : {"D5", "A3"}) {
    CAPTURE(t);
    const LieAlgebra L = build_chevalley(build_root_system(RootSystemSpec::parse(t)));
    const auto r = run_negative_control(L, 1);
    CHECK(r.status == Status::Pass);
    const OmegaSystem S(L);
    const auto sv = solve_special_value(S, 1);
    CHECK_FALSE(sv.s_star.has_value());
    CHECK(sv.entry.status == Status::Fail);
  }
  CHECK(run_negative_control(d4(), 1).status == Status::Fail);
}

TEST_CASE("status strings round-trip") {
  for (Status s : {Status::Pass, Status::Fail, Status::Skipped}) CHECK(parse_status(status_str(s)) == s);
  CHECK_THROWS(parse_status("maybe"));
}
