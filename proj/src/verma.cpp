#include "cisys/verma.hpp"

#include <algorithm>
#include <sstream>

#include "cisys/error.hpp"
#include "cisys/parallel.hpp"

namespace cisys {

PBWElement VermaModule::project(const PBWElement& u) const {
  const LieAlgebra& L = algebra();
  PBWElement out;
  for (const auto& [m, c] : u.terms()) {
    Word body;
    UPoly k = c;
    bool zero = false;
    for (std::size_t x : m) {
      const Block b = L.block_of(x);
      if (b == Block::NBar) {
        body.push_back(static_cast<std::uint16_t>(x));
      } else if (b == Block::N) {
        zero = true;
        break;
      } else {
        const Rational d = L.dchi(Element::basis(x));
        if (d == 0) {
          zero = true;
          break;
        }
        k = k * (UPoly::s() * d);
      }
    }
    if (!zero) out.add_term(body, k);
  }
  return out;
}

VermaElement VermaModule::act(std::size_t x, const VermaElement& m) const {
  return {project(U_.left_multiply(x, m.body))};
}

VermaElement VermaModule::act(const Element& x, const VermaElement& m) const {
  return {project(U_.left_multiply(x, m.body))};
}

VermaElement VermaModule::act_word(const std::vector<std::size_t>& word, const VermaElement& m) const {
  VermaElement r = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = act(*it, r);
  return r;
}

VermaElement act(const LieAlgebra& L, const Element& x, const VermaElement& m) {
  return VermaModule(L).act(x, m);
}

std::vector<std::size_t> q_basis(const LieAlgebra& L) {
  std::vector<std::size_t> q;
  for (std::size_t i = L.levi_begin(); i < L.n_end(); ++i) q.push_back(i);
  return q;
}

bool SingularValues::contains(const Rational& s0) const {
  return all || std::find(values.begin(), values.end(), s0) != values.end();
}

std::string SingularValues::str() const {
  if (all) return "all s";
  if (values.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i].get_str();
  os << "}";
  return os.str();
}

SpanReducer::SpanReducer(const std::vector<PBWElement>& generators) {
  for (const auto& g : generators) {
    if (g.depends_on_s()) throw DomainError("SpanReducer: generators must have s-independent coefficients");
    for (const auto& [m, c] : g.terms()) cols_.push_back(m);
  }
  std::sort(cols_.begin(), cols_.end(), WordOrder());
  cols_.erase(std::unique(cols_.begin(), cols_.end()), cols_.end());
  auto col_of = [&](const Word& w) {
    return static_cast<std::size_t>(std::lower_bound(cols_.begin(), cols_.end(), w, WordOrder()) - cols_.begin());
  };
  Matrix m(generators.size(), cols_.size());
  gens_t_ = Matrix(cols_.size(), generators.size());
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (const auto& [w, c] : generators[r].terms()) {
      m(r, col_of(w)) = c.constant_term();
      gens_t_(col_of(w), r) = c.constant_term();
    }
  const auto piv = rref(m);
  if (piv.size() != generators.size()) throw DomainError("SpanReducer: generators are linearly dependent");
  for (std::size_t r = 0; r < piv.size(); ++r) {
    PBWElement row;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (m(r, c) != 0) row.add_term(cols_[c], UPoly(m(r, c)));
    rows_.push_back(std::move(row));
    pivots_.push_back(cols_[piv[r]]);
  }
}

PBWElement SpanReducer::residual(const PBWElement& e) const {
  PBWElement r = e;
  // Pivot columns of an RREF are cleared in every other row, so one pass suffices.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const UPoly c = r.coeff(pivots_[k]);
    if (c.is_zero()) continue;
    PBWElement t = rows_[k];
    t *= c;
    r -= t;
  }
  return r;
}

std::optional<std::vector<Rational>> SpanReducer::coordinates(const PBWElement& e) const {
  if (e.depends_on_s()) throw DomainError("SpanReducer::coordinates: element depends on s");
  std::vector<Rational> b(cols_.size());
  for (const auto& [w, c] : e.terms()) {
    auto it = std::lower_bound(cols_.begin(), cols_.end(), w, WordOrder());
    if (it == cols_.end() || *it != w) return std::nullopt;
    b[static_cast<std::size_t>(it - cols_.begin())] = c.constant_term();
  }
  return solve(gens_t_, b);
}

namespace {

void require_s_free(const SubmoduleCandidate& F) {
  if (F.generators.empty()) throw DomainError("singular_values: candidate has no generators");
  for (const auto& g : F.generators) {
    if (g.body.is_zero()) throw DomainError("singular_values: zero generator in " + F.label);
    if (g.body.depends_on_s())
      throw DomainError("singular_values: generators with s-dependent coefficients are not supported");
  }
}

std::vector<PBWElement> bodies(const SubmoduleCandidate& F) {
  std::vector<PBWElement> b;
  for (const auto& g : F.generators) b.push_back(g.body);
  return b;
}

}  // namespace

SingularValues singular_values(const LieAlgebra& L, const SubmoduleCandidate& F, unsigned jobs) {
  require_s_free(F);
  const SpanReducer red(bodies(F));
  const VermaModule M(L);
  const auto q = q_basis(L);
  const std::size_t ng = F.generators.size();
  std::vector<PBWElement> res(q.size() * ng);
  parallel_for(res.size(), jobs, [&](std::size_t k) {
    res[k] = red.residual(M.act(q[k / ng], F.generators[k % ng]).body);
  });

  SingularValues out;
  UPoly g;
  for (std::size_t k = 0; k < res.size(); ++k) {
    for (const auto& [m, c] : res[k].terms()) g = UPoly::gcd(g, c);
    if (!res[k].is_zero() && out.witness.empty())
      out.witness = L.basis(q[k / ng]).label + " . " + F.label + "[" + std::to_string(k % ng) +
                    "] leaves the span, residual " + M.str({res[k]});
  }
  out.condition = g;
  if (g.is_zero()) {
    out.all = true;
    return out;
  }
  out.values = g.rational_roots();
  return out;
}

namespace {

void require_stable(const LieAlgebra& L, const SubmoduleCandidate& F, const SpanReducer& red, const VermaModule& M,
                    const Rational& s0) {
  for (std::size_t y : q_basis(L))
    for (std::size_t i = 0; i < F.generators.size(); ++i) {
      const PBWElement r = red.residual(M.act(y, F.generators[i]).body).at(s0);
      if (!r.is_zero())
        throw DomainError("module_action_matrix: s = " + s0.get_str() + " is not a singular value (" +
                          L.basis(y).label + " moves generator " + std::to_string(i) + " out of the span)");
    }
}

Matrix action_matrix(const SubmoduleCandidate& F, const SpanReducer& red, const VermaModule& M, const Element& x,
                     const Rational& s0) {
  const std::size_t n = F.generators.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const PBWElement v = M.act(x, F.generators[i]).body.at(s0);
    auto coords = red.coordinates(v);
    if (!coords)
      throw WitnessError("module_action_matrix: image of generator " + std::to_string(i) + " leaves the span",
                         M.str({red.residual(v)}));
    for (std::size_t r = 0; r < n; ++r) a(r, i) = (*coords)[r];
  }
  return a;
}

}  // namespace

Matrix module_action_matrix(const LieAlgebra& L, const SubmoduleCandidate& F, const Element& x, const Rational& s0) {
  require_s_free(F);
  for (const auto& [i, c] : x.terms())
    if (L.block_of(i) == Block::NBar) throw DomainError("module_action_matrix: x is not in q");
  const SpanReducer red(bodies(F));
  const VermaModule M(L);
  require_stable(L, F, red, M, s0);
  return action_matrix(F, red, M, x, s0);
}

std::vector<Matrix> q_action_matrices(const LieAlgebra& L, const SubmoduleCandidate& F, const Rational& s0) {
  require_s_free(F);
  const SpanReducer red(bodies(F));
  const VermaModule M(L);
  require_stable(L, F, red, M, s0);
  std::vector<Matrix> out;
  for (std::size_t y : q_basis(L)) out.push_back(action_matrix(F, red, M, Element::basis(y), s0));
  return out;
}

InducedModule::InducedModule(const LieAlgebra& L, std::vector<Matrix> q_matrices) : U_(L), a_(L.dim()) {
  const auto q = q_basis(L);
  if (q_matrices.size() != q.size()) throw DomainError("InducedModule: need one matrix per q basis vector");
  dim_ = q_matrices.empty() ? 0 : q_matrices.front().rows();
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q_matrices[k].rows() != dim_ || q_matrices[k].cols() != dim_)
      throw DomainError("InducedModule: matrix size mismatch");
    a_[q[k]] = std::move(q_matrices[k]);
  }
}

std::vector<PBWElement> InducedModule::act(std::size_t x, const std::vector<PBWElement>& v) const {
  if (v.size() != dim_) throw DomainError("InducedModule::act: wrong fiber dimension");
  const LieAlgebra& L = U_.algebra();
  std::vector<PBWElement> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const PBWElement xv = U_.left_multiply(x, v[i]);
    for (const auto& [m, c] : xv.terms()) {
      auto split = std::find_if(m.begin(), m.end(), [&](std::uint16_t y) { return L.block_of(y) != Block::NBar; });
      const Word body(m.begin(), split);
      // q-suffix acts on e_i, rightmost factor first.
      std::vector<Rational> e(dim_);
      e[i] = 1;
      for (auto it = m.end(); it != split;) {
        --it;
        const Matrix& A = a_[*it];
        std::vector<Rational> f(dim_);
        for (std::size_t r = 0; r < dim_; ++r)
          for (std::size_t k = 0; k < dim_; ++k)
            if (e[k] != 0) f[r] += A(r, k) * e[k];
        e = std::move(f);
      }
      for (std::size_t j = 0; j < dim_; ++j)
        if (e[j] != 0) out[j].add_term(body, c * e[j]);
    }
  }
  return out;
}

}  // namespace cisys
