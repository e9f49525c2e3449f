#include "doctest.h"

#include <random>

#include "cisys/weylreal.hpp"

using namespace cisys;

namespace {

const LieAlgebra& d4() {
  static const LieAlgebra L = build_chevalley(build_root_system({Family::D, 4}));
  return L;
}

const WeylRealization& W4() {
  static const WeylRealization W(d4());
  return W;
}

Rational eval_at(const MPoly& p, const std::vector<Rational>& x) {
  MPoly q = p;
  for (std::size_t k = 0; k < x.size(); ++k) q = q.substitute(k, x[k]);
  if (q.is_zero()) return 0;
  return q.terms().begin()->second;
}

}  // namespace

TEST_CASE("ad_exp_inverse matches the matrix exponential at random points") {
  const auto& L = d4();
  const NbarCoords X(L);
  const std::size_t d = L.dim();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> x(X.nvars());
    for (std::size_t k = 0; k < X.n; ++k) x[k] = ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    // Matrix of -ad(W) on g, columns are images of basis vectors.
    Matrix A(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < X.n; ++i)
        for (const auto& [k, c] : L.bracket_basis(i, j).terms()) A(k, j) -= x[i] * c;
    Matrix E = Matrix::identity(d), P = Matrix::identity(d);
    Rational fact = 1;
    for (int p = 1; p <= 6; ++p) {
      P = P * A;
      fact *= p;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) E(r, c) += P(r, c) / fact;
    }
    CHECK(P.is_zero());  // nilpotent well before the sixth power
    for (std::size_t j = 0; j < d; ++j) {
      const PolyElement Y = ad_exp_inverse(L, X, Element::basis(j));
      for (std::size_t r = 0; r < d; ++r) CHECK(eval_at(Y.coeff(r), x) == E(r, j));
    }
  }
}

TEST_CASE("ad_exp_inverse fixes the centre and has q-part H_gamma on H_gamma") {
  const auto& L = d4();
  const std::size_t zpos = L.nbar_end() - 1;
  const PolyElement Z = ad_exp_inverse(L, Element::basis(zpos));
  CHECK(Z == PolyElement::constant(Z.nvars(), Element::basis(zpos)));
  const Element hg = L.coroot(L.gamma());
  const PolyElement H = ad_exp_inverse(L, hg);
  for (std::size_t i = L.levi_begin(); i < L.n_end(); ++i) CHECK(H.coeff(i) == MPoly::constant(H.nvars(), hg.coeff(i)));
}

TEST_CASE("R on generators") {
  const auto& W = W4();
  const auto& L = d4();
  const std::size_t n = W.coords().n;
  CHECK(W.r_op(PBWElement::one()) == PolyDiffOp::identity(n));
  CHECK(W.r_op(PBWElement::generator(n - 1)) == PolyDiffOp::partial(n, n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    PointFunctional want;
    MultiIndex a(n, 0);
    a[i] = 1;
    want.terms.emplace(a, UPoly(1));
    CHECK(eval_at_identity(W.r_generator(i)) == want);
    for (std::size_t j = 0; j < n; ++j) {
      PolyDiffOp br(n);
      for (const auto& [k, c] : L.bracket_basis(i, j).terms()) {
        PolyDiffOp t = W.r_generator(k);
        t *= c;
        br += t;
      }
      CHECK(op_commutator(W.r_generator(i), W.r_generator(j)) == br);
    }
  }
}

TEST_CASE("R is multiplicative") {
  const auto& W = W4();
  Enveloping U(d4());
  std::mt19937 rng(23);
  const std::size_t n = W.coords().n;
  for (int t = 0; t < 25; ++t) {
    std::vector<std::size_t> w(3);
    for (auto& x : w) x = rng() % n;
    PolyDiffOp want = PolyDiffOp::identity(n);
    for (std::size_t x : w) want = compose(want, W.r_generator(x));
    CHECK(W.r_op(U.normal_order(w)) == want);
  }
}

TEST_CASE("operator calculus") {
  const std::size_t n = 2;
  const PolyDiffOp dz = PolyDiffOp::partial(n, 1);
  const PolyDiffOp z = PolyDiffOp::multiplication(n, MPoly::variable(n + 1, 1));
  CHECK(op_commutator(dz, z) == PolyDiffOp::identity(n));
  PolyDiffOp zdz = compose(z, dz);
  CHECK(eval_at_identity(zdz).is_zero());
  CHECK(zdz.order() == 1);
  const MPoly f = MPoly::variable(n + 1, 0) * MPoly::variable(n + 1, 1) * MPoly::variable(n + 1, 1);
  CHECK(compose(dz, dz).apply(f) == MPoly::variable(n + 1, 0) * Rational(2));
}

TEST_CASE("Pi is a Lie algebra homomorphism of order one") {
  const auto& L = d4();
  const auto& W = W4();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    CHECK(W.pi_op(i).order() <= 1);
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      PolyDiffOp want(W.coords().n);
      for (const auto& [k, c] : L.bracket_basis(i, j).terms()) {
        PolyDiffOp t = W.pi_op(k);
        t *= c;
        want += t;
      }
      CHECK(op_commutator(W.pi_op(i), W.pi_op(j)) == want);
    }
  }
}

TEST_CASE("Pi examples") {
  const auto& L = d4();
  const auto& W = W4();
  const std::size_t n = W.coords().n;
  for (std::size_t i = L.n_begin(); i < L.n_end(); ++i) CHECK(eval_at_identity(W.pi_op(i)).is_zero());
  PolyDiffOp mdz = PolyDiffOp::partial(n, n - 1);
  mdz *= Rational(-1);
  CHECK(W.pi_op(n - 1) == mdz);
  const MPoly one = MPoly::constant(n + 1, 1);
  const MPoly v = W.pi_op(L.coroot(L.gamma())).apply(one).zero_prefix(n);
  CHECK(v.to_upoly(n) == UPoly::s() * Rational(-2));
  // [Pi_s(X_eps), R(X_-eps)]_e = s
  const auto h = heisenberg_grading(L);
  for (std::size_t p : h.grade(1)) {
    const std::size_t m = L.position(-L.basis(p).root);
    PointFunctional want;
    want.terms.emplace(MultiIndex(n, 0), UPoly::s());
    CHECK(eval_at_identity(op_commutator(W.pi_op(p), W.r_generator(m))) == want);
  }
}

TEST_CASE("Pi of n-bar commutes with R of U(n-bar)") {
  const auto& L = d4();
  const auto& W = W4();
  for (const auto& w : enumerate_monomials(nbar_generators(L), 2))
    for (std::size_t y : nbar_generators(L))
      CHECK(op_commutator(W.pi_op(y), W.r_op(PBWElement::monomial(w))).is_zero());
}
