#include "cisys/weylreal.hpp"

#include <sstream>

#include "cisys/error.hpp"

namespace cisys {

NbarCoords::NbarCoords(const LieAlgebra& L) : n(L.nbar_end() - L.nbar_begin()) {
  for (std::size_t i = 0; i < n; ++i) {
    const Root& r = L.basis(i).root;
    names.push_back(r == -L.gamma() ? "z" : "x" + (-r).label());
  }
  names.push_back("s");
}

MPoly NbarCoords::from_upoly(const UPoly& p) const {
  MPoly f(nvars());
  Exponents e(nvars(), 0);
  for (int k = 0; k <= p.degree(); ++k) {
    e[s_var()] = static_cast<std::uint8_t>(k);
    f.add_term(e, p.coeff(k));
  }
  return f;
}

PolyElement PolyElement::constant(std::size_t nvars, const Element& e) {
  PolyElement p(nvars);
  for (const auto& [i, c] : e.terms()) p.add_term(i, MPoly::constant(nvars, c));
  return p;
}

MPoly PolyElement::coeff(std::size_t i) const {
  auto it = c_.find(i);
  return it == c_.end() ? MPoly(nvars_) : it->second;
}

void PolyElement::add_term(std::size_t i, const MPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(i, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) c_.erase(it);
  }
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  for (const auto& [i, p] : o.c_) add_term(i, p);
  return *this;
}

PolyElement& PolyElement::operator*=(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [i, p] : c_) p *= k;
  return *this;
}

PolyElement poly_bracket(const LieAlgebra& L, const PolyElement& a, const PolyElement& b) {
  PolyElement out(a.nvars());
  for (const auto& [i, p] : a.terms())
    for (const auto& [j, q] : b.terms()) {
      const Element& br = L.bracket_basis(i, j);
      if (br.is_zero()) continue;
      const MPoly pq = p * q;
      for (const auto& [k, c] : br.terms()) out.add_term(k, pq * c);
    }
  return out;
}

namespace {

PolyElement coordinate_element(const NbarCoords& X) {
  PolyElement W(X.nvars());
  for (std::size_t i = 0; i < X.n; ++i) W.add_term(i, MPoly::variable(X.nvars(), i));
  return W;
}

}  // namespace

PolyElement ad_exp_inverse(const LieAlgebra& L, const NbarCoords& X, const Element& Y) {
  const PolyElement W = coordinate_element(X);
  PolyElement term = PolyElement::constant(X.nvars(), Y);
  PolyElement sum = term;
  for (int k = 1; !term.is_zero(); ++k) {
    if (k > 8) throw Error("ad_exp_inverse: ad(W) is not nilpotent on Y");
    term = poly_bracket(L, W, term);
    term *= Rational(-1, k);
    sum += term;
  }
  return sum;
}

PolyElement ad_exp_inverse(const LieAlgebra& L, const Element& Y) { return ad_exp_inverse(L, NbarCoords(L), Y); }

PolyDiffOp PolyDiffOp::identity(std::size_t ncoords) {
  return multiplication(ncoords, MPoly::constant(ncoords + 1, 1));
}

PolyDiffOp PolyDiffOp::multiplication(std::size_t ncoords, const MPoly& f) {
  PolyDiffOp d(ncoords);
  d.add_term(MultiIndex(ncoords, 0), f);
  return d;
}

PolyDiffOp PolyDiffOp::partial(std::size_t ncoords, std::size_t k) {
  PolyDiffOp d(ncoords);
  MultiIndex a(ncoords, 0);
  a.at(k) = 1;
  d.add_term(a, MPoly::constant(ncoords + 1, 1));
  return d;
}

MPoly PolyDiffOp::coeff(const MultiIndex& a) const {
  auto it = t_.find(a);
  return it == t_.end() ? MPoly(n_ + 1) : it->second;
}

void PolyDiffOp::add_term(const MultiIndex& a, const MPoly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(a, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int PolyDiffOp::order() const {
  int o = -1;
  for (const auto& [a, f] : t_) {
    int d = 0;
    for (auto k : a) d += k;
    o = std::max(o, d);
  }
  return o;
}

PolyDiffOp& PolyDiffOp::operator+=(const PolyDiffOp& o) {
  for (const auto& [a, f] : o.t_) add_term(a, f);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator-=(const PolyDiffOp& o) {
  for (const auto& [a, f] : o.t_) add_term(a, -f);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator*=(const MPoly& f) {
  std::map<MultiIndex, MPoly> out;
  for (const auto& [a, g] : t_) {
    MPoly p = f * g;
    if (!p.is_zero()) out.emplace(a, std::move(p));
  }
  t_ = std::move(out);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator*=(const Rational& k) {
  if (k == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [a, g] : t_) g *= k;
  return *this;
}

MPoly PolyDiffOp::apply(const MPoly& f) const {
  MPoly r(f.nvars());
  for (const auto& [a, g] : t_) r += g * f.derivative(a);
  return r;
}

PolyDiffOp PolyDiffOp::specialize_s(const Rational& s0) const {
  PolyDiffOp d(n_);
  for (const auto& [a, g] : t_) d.add_term(a, g.substitute(n_, s0));
  return d;
}

namespace {

std::string multi_index_str(const MultiIndex& a, const NbarCoords& X) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k]) continue;
    if (!first) os << "*";
    first = false;
    os << "d" << X.name(k);
    if (a[k] > 1) os << "^" << int(a[k]);
  }
  return os.str();
}

void binomial_split(const MultiIndex& alpha, std::size_t k, MultiIndex& gamma, Rational coeff,
                    const std::function<void(const MultiIndex&, const Rational&)>& emit) {
  if (k == alpha.size()) {
    emit(gamma, coeff);
    return;
  }
  Rational c = 1;  // C(alpha_k, g)
  for (int g = 0; g <= alpha[k]; ++g) {
    gamma[k] = static_cast<std::uint8_t>(g);
    binomial_split(alpha, k + 1, gamma, coeff * c, emit);
    c = c * (alpha[k] - g) / (g + 1);
  }
  gamma[k] = 0;
}

}  // namespace

std::string PolyDiffOp::str(const NbarCoords& X) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, f] : t_) {
    if (!first) os << " + ";
    first = false;
    const std::string d = multi_index_str(a, X);
    os << "(" << f.str([&](std::size_t k) { return X.name(k); }) << ")";
    if (!d.empty()) os << "*" << d;
  }
  return os.str();
}

PolyDiffOp compose(const PolyDiffOp& a, const PolyDiffOp& b) {
  // (f d^alpha)(g d^beta) = f sum_{gamma <= alpha} C(alpha, gamma) (d^gamma g) d^{alpha - gamma + beta}
  const std::size_t n = a.ncoords();
  if (b.ncoords() != n) throw Error("compose: coordinate count mismatch");
  PolyDiffOp out(n);
  MultiIndex gamma(n, 0);
  for (const auto& [alpha, f] : a.terms())
    for (const auto& [beta, g] : b.terms())
      binomial_split(alpha, 0, gamma, 1, [&](const MultiIndex& gm, const Rational& c) {
        const MPoly dg = g.derivative(gm);
        if (dg.is_zero()) return;
        MultiIndex m(n);
        for (std::size_t k = 0; k < n; ++k) m[k] = static_cast<std::uint8_t>(alpha[k] - gm[k] + beta[k]);
        out.add_term(m, f * dg * c);
      });
  return out;
}

PolyDiffOp op_commutator(const PolyDiffOp& a, const PolyDiffOp& b) { return compose(a, b) - compose(b, a); }

UPoly PointFunctional::condition() const {
  UPoly g;
  for (const auto& [a, c] : terms) g = UPoly::gcd(g, c);
  return g;
}

PointFunctional PointFunctional::at(const Rational& s0) const {
  PointFunctional p;
  for (const auto& [a, c] : terms) {
    const Rational v = c.eval(s0);
    if (v != 0) p.terms.emplace(a, UPoly(v));
  }
  return p;
}

std::string PointFunctional::str(const NbarCoords& X) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms) {
    if (!first) os << " + ";
    first = false;
    const std::string d = multi_index_str(a, X);
    os << "(" << c.str() << ")" << (d.empty() ? "" : "*" + d);
  }
  return os.str();
}

PointFunctional eval_at_identity(const PolyDiffOp& a) {
  PointFunctional p;
  const std::size_t n = a.ncoords();
  for (const auto& [alpha, f] : a.terms()) {
    UPoly c = f.zero_prefix(n).to_upoly(n);
    if (!c.is_zero()) p.terms.emplace(alpha, std::move(c));
  }
  return p;
}

WeylRealization::WeylRealization(const LieAlgebra& L) : L_(&L), X_(L) {
  const std::size_t n = X_.n;
  const PolyElement W = coordinate_element(X_);
  for (std::size_t i = 0; i < n; ++i) {
    // exp(W) exp(tB) = exp(W + tB + t/2 [W, B]) in the two-step nilpotent n-bar
    PolyElement v = PolyElement::constant(X_.nvars(), Element::basis(i));
    PolyElement corr = poly_bracket(L, W, v);
    corr *= Rational(1, 2);
    v += corr;
    PolyDiffOp d(n);
    for (const auto& [j, f] : v.terms()) {
      if (L.block_of(j) != Block::NBar) throw Error("WeylRealization: n-bar is not closed under brackets");
      MultiIndex a(n, 0);
      a[j] = 1;
      d.add_term(a, f);
    }
    gens_.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < L.dim(); ++i) pi_.push_back(pi_op(Element::basis(i)));
}

PolyDiffOp WeylRealization::r_op(const PBWElement& u) const {
  PolyDiffOp out(X_.n);
  for (const auto& [m, c] : u.terms()) {
    PolyDiffOp op = PolyDiffOp::identity(X_.n);
    for (std::size_t x : m) {
      if (L_->block_of(x) != Block::NBar) throw DomainError("r_op: element is not in U(n-bar)");
      op = compose(op, gens_[x]);
    }
    op *= X_.from_upoly(c);
    out += op;
  }
  return out;
}

PolyDiffOp WeylRealization::r_field(const PolyElement& v) const {
  PolyDiffOp out(X_.n);
  for (const auto& [i, f] : v.terms()) {
    if (L_->block_of(i) != Block::NBar) throw DomainError("r_field: element is not n-bar valued");
    PolyDiffOp t = gens_[i];
    t *= f;
    out += t;
  }
  return out;
}

PolyDiffOp WeylRealization::pi_op(const Element& Y) const {
  const PolyElement A = ad_exp_inverse(*L_, X_, Y);
  PolyElement nbar(X_.nvars());
  MPoly fn(X_.nvars());
  for (const auto& [i, f] : A.terms()) {
    switch (L_->block_of(i)) {
      case Block::NBar: nbar.add_term(i, f); break;
      case Block::Levi: fn += f * L_->dchi(Element::basis(i)); break;
      case Block::N: break;
    }
  }
  PolyDiffOp out = PolyDiffOp::multiplication(X_.n, fn * MPoly::variable(X_.nvars(), X_.s_var(), -1));
  out -= r_field(nbar);
  return out;
}

PolyDiffOp WeylRealization::pi_op(std::size_t i) const {
  if (i < pi_.size()) return pi_[i];
  return pi_op(Element::basis(i));
}

PolyDiffOp r_op(const LieAlgebra& L, const PBWElement& u) { return WeylRealization(L).r_op(u); }

PolyDiffOp pi_op(const LieAlgebra& L, const Element& Y) { return WeylRealization(L).pi_op(Y); }

}  // namespace cisys
