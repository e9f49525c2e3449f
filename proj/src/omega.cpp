#include "cisys/omega.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "cisys/error.hpp"
#include "cisys/parallel.hpp"

namespace cisys {

std::string status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "skipped";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw SpecError("unknown check status '" + s + "'");
}

OmegaSystem::OmegaSystem(const LieAlgebra& L) : L_(&L), U_(L) {
  const auto h = heisenberg_grading(L);
  vplus_ = h.grade(1);
  for (std::size_t p : vplus_) vminus_.push_back(L.position(-L.basis(p).root));

  for (std::size_t k = L.levi_begin(); k < L.levi_end(); ++k) {
    const Element Z = Element::basis(k);
    PBWElement w;
    for (std::size_t a : vplus_) {
      const Element za = L.bracket(Z, Element::basis(a));
      for (const auto& [bp, m] : za.terms()) {
        // bp is beta' = gamma - beta; the sum runs over beta, so b = gamma - bp.
        const std::size_t b = L.position(L.gamma() - L.basis(bp).root);
        const Rational c = Rational(-1, 2) * n_coeff(b) * m * Rational(1, 2);
        const std::size_t ma = L.position(-L.basis(a).root), mb = L.position(-L.basis(b).root);
        const std::size_t ab[2] = {ma, mb}, ba[2] = {mb, ma};
        PBWElement t = U_.normal_order(ab) + U_.normal_order(ba);
        t *= UPoly(c);
        w += t;
      }
    }
    omega2_basis_.push_back(std::move(w));
  }
}

Rational OmegaSystem::n_coeff(std::size_t b) const {
  const Root& beta = L_->basis(b).root;
  return L_->structure_constant(beta, L_->gamma() - beta);
}

Rational OmegaSystem::m_coeff(std::size_t a, std::size_t bprime, const Element& Z) const {
  return L_->bracket(Z, Element::basis(a)).coeff(bprime);
}

PBWElement OmegaSystem::omega2(const Element& Z) const {
  if (!L_->in_block(Z, Block::Levi)) throw DomainError("omega2: argument is not in l");
  PBWElement out;
  for (const auto& [k, c] : Z.terms()) {
    PBWElement t = omega2_basis_[k - L_->levi_begin()];
    t *= UPoly(c);
    out += t;
  }
  return out;
}

PBWElement OmegaSystem::omega2_component(const std::vector<int>& component, const Element& Z) const {
  return omega2(project_to_component(*L_, component, Z));
}

PBWElement OmegaSystem::omega3(const Element& Y) const {
  for (const auto& [i, c] : Y.terms())
    if (std::find(vminus_.begin(), vminus_.end(), i) == vminus_.end())
      throw DomainError("omega3: argument is not in V-");
  PBWElement out;
  for (std::size_t k = 0; k < vplus_.size(); ++k)
    out += U_.left_multiply(vminus_[k], omega2(L_->bracket(Element::basis(vplus_[k]), Y)));
  return out;
}

PBWElement OmegaSystem::omega3_with_basis(const Element& Y, const std::vector<Element>& W,
                                          const std::vector<Element>& Wdual) const {
  if (W.size() != Wdual.size()) throw DomainError("omega3_with_basis: basis size mismatch");
  PBWElement out;
  for (std::size_t i = 0; i < W.size(); ++i) out += U_.left_multiply(Wdual[i], omega2(L_->bracket(W[i], Y)));
  return out;
}

SubmoduleCandidate OmegaSystem::omega3_span() const {
  SubmoduleCandidate F;
  F.label = "omega3";
  for (std::size_t m : vminus_) F.generators.push_back({omega3(Element::basis(m))});
  return F;
}

OmegaOperators::OmegaOperators(const OmegaSystem& sys, const WeylRealization& W) : sys_(&sys), W_(&W) {
  const LieAlgebra& L = sys.algebra();
  const std::size_t n = W.coords().n;
  for (std::size_t k = L.levi_begin(); k < L.levi_end(); ++k) {
    const Element Z = Element::basis(k);
    PolyDiffOp op(n);
    for (std::size_t a : sys.vplus()) {
      const Element za = L.bracket(Z, Element::basis(a));
      for (const auto& [bp, m] : za.terms()) {
        const std::size_t b = L.position(L.gamma() - L.basis(bp).root);
        const Rational c = Rational(-1, 4) * sys.n_coeff(b) * m;
        const auto& Ra = W.r_generator(L.position(-L.basis(a).root));
        const auto& Rb = W.r_generator(L.position(-L.basis(b).root));
        PolyDiffOp t = compose(Ra, Rb) + compose(Rb, Ra);
        t *= c;
        op += t;
      }
    }
    omega2_.push_back(std::move(op));
  }
  for (std::size_t m : sys.vminus()) omega3_.push_back(omega3(Element::basis(m)));
}

PolyDiffOp OmegaOperators::omega2(const Element& Z) const {
  const LieAlgebra& L = sys_->algebra();
  if (!L.in_block(Z, Block::Levi)) throw DomainError("Omega2 operator: argument is not in l");
  PolyDiffOp out(W_->coords().n);
  for (const auto& [k, c] : Z.terms()) {
    PolyDiffOp t = omega2_[k - L.levi_begin()];
    t *= c;
    out += t;
  }
  return out;
}

PolyDiffOp OmegaOperators::omega3(const Element& Y) const {
  const LieAlgebra& L = sys_->algebra();
  PolyDiffOp out(W_->coords().n);
  for (std::size_t k = 0; k < sys_->vplus().size(); ++k) {
    const Element z = L.bracket(Element::basis(sys_->vplus()[k]), Y);
    if (z.is_zero()) continue;
    out += compose(W_->r_generator(sys_->vminus()[k]), omega2(z));
  }
  return out;
}

}  // namespace cisys
