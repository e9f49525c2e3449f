// Verification checks over the omega construction, in both pictures.
#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "cisys/error.hpp"
#include "cisys/omega.hpp"
#include "cisys/parallel.hpp"

namespace cisys {

namespace {

template <class F>
CheckResult run_check(std::string name, std::string identity, F&& body) {
  CheckResult r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const WitnessError& e) {
    r.status = Status::Fail;
    r.witness = std::string(e.what()) + ": " + e.witness;
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.witness = e.what();
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Records the first failure; the check passes iff no failure was recorded.
struct Failures {
  std::size_t count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  void finish(CheckResult& r) const {
    r.status = count == 0 ? Status::Pass : Status::Fail;
    if (count) r.witness = first + (count > 1 ? " (+" + std::to_string(count - 1) + " more)" : "");
  }
};

/// Failures collected per task index, merged in index order.
struct IndexedFailures {
  explicit IndexedFailures(std::size_t n) : slots(n) {}
  std::vector<std::vector<std::string>> slots;
  void finish(CheckResult& r) const {
    Failures f;
    for (const auto& s : slots)
      for (const auto& w : s) f.add(w);
    f.finish(r);
  }
};

std::string label(const LieAlgebra& L, std::size_t i) { return L.basis(i).label; }

nlohmann::json rationals_json(const std::vector<Rational>& v) {
  auto j = nlohmann::json::array();
  for (const auto& q : v) j.push_back(q.get_str());
  return j;
}

/// Polynomial in s obtained by collecting every (x)-monomial coefficient of an operator.
UPoly s_condition(const PolyDiffOp& op) {
  const std::size_t n = op.ncoords();
  UPoly g;
  for (const auto& [a, f] : op.terms()) {
    std::map<Exponents, std::vector<Rational>> by_x;
    for (const auto& [e, c] : f.terms()) {
      Exponents x(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
      auto& v = by_x[x];
      const std::size_t d = e[n];
      if (v.size() <= d) v.resize(d + 1);
      v[d] += c;
    }
    for (auto& [x, v] : by_x) g = UPoly::gcd(g, UPoly(std::move(v)));
  }
  return g;
}

nlohmann::json holds_for(const UPoly& cond) {
  if (cond.is_zero()) return "all s";
  return rationals_json(cond.rational_roots());
}

PolyDiffOp scaled(PolyDiffOp a, const Rational& c) {
  a *= c;
  return a;
}

std::vector<Element> levi_basis(const LieAlgebra& L) {
  std::vector<Element> b;
  for (std::size_t k = L.levi_begin(); k < L.levi_end(); ++k) b.push_back(Element::basis(k));
  return b;
}

/// Greedy maximal independent subset (s-free elements).
std::vector<PBWElement> independent_subset(const std::vector<PBWElement>& v) {
  std::vector<PBWElement> out;
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    if (!out.empty() && SpanReducer(out).residual(e).is_zero()) continue;
    out.push_back(e);
  }
  return out;
}

std::size_t l_closure_dim(const VermaModule& M, const PBWElement& seed, const Rational& s0) {
  const LieAlgebra& L = M.algebra();
  std::vector<PBWElement> span{seed};
  for (std::size_t done = 0; done < span.size(); ++done) {
    for (std::size_t k = L.levi_begin(); k < L.levi_end(); ++k) {
      const PBWElement y = M.act(k, {span[done]}).body.at(s0);
      if (y.is_zero() || SpanReducer(span).residual(y).is_zero()) continue;
      span.push_back(y);
    }
  }
  return span.size();
}

}  // namespace

CheckResult check_chevalley(const LieAlgebra& L, bool exhaustive_jacobi) {
  return run_check("chevalley.normalizations",
                   "[X_a, X_-a] = H_a; [H_a, X_b] = (b,a) X_b; B(X_a, X_-a) = 1; Jacobi on basis triples", [&](CheckResult& r) {
    Failures f;
    for (const auto& w : check_normalizations(L)) f.add(w);
    const auto jac = exhaustive_jacobi ? check_jacobi_exhaustive(L) : std::vector<std::string>{};
    for (const auto& w : jac) f.add(w);
    const auto& roots = L.roots().all_roots();
    for (const auto& a : roots) {
      if (L.killing(L.root_vector(a), L.root_vector(-a)) != 1) f.add("B(X_a, X_-a) != 1 for " + a.label());
      const Element ha = L.coroot(a);
      if (!(L.bracket(L.root_vector(a), L.root_vector(-a)) == ha)) f.add("[X_a, X_-a] != H_a for " + a.label());
      for (const auto& b : roots) {
        const Element want = L.roots().inner(b, a) * L.root_vector(b);
        if (!(L.bracket(ha, L.root_vector(b)) == want)) f.add("[H_a, X_b] for a=" + a.label() + " b=" + b.label());
        if (!(a + b).is_zero() && L.killing(L.root_vector(a), L.root_vector(b)) != 0)
          f.add("B(X_a, X_b) != 0 for a=" + a.label() + " b=" + b.label());
      }
    }
    r.data["roots"] = roots.size();
    r.data["jacobi"] = exhaustive_jacobi ? "all basis triples" : "generator triples (build-time)";
    f.finish(r);
  });
}

CheckResult check_grading(const LieAlgebra& L) {
  return run_check("grading.decomposition",
                   "ad(H_gamma) has eigenvalues -2..2; [g(i), g(j)] in g(i+j); dim g(+-2) = 1; gamma - b in V+ with N = +-1",
                   [&](CheckResult& r) {
    Failures f;
    const auto h = heisenberg_grading(L);
    const Element hg = L.coroot(L.gamma());
    std::size_t total = 0;
    for (int k = -2; k <= 2; ++k) {
      total += h.grade(k).size();
      for (std::size_t p : h.grade(k))
        if (!(L.bracket(hg, Element::basis(p)) == Rational(k) * Element::basis(p)))
          f.add(label(L, p) + " is not an ad(H_gamma) eigenvector with eigenvalue " + std::to_string(k));
    }
    if (total != L.dim()) f.add("graded pieces do not exhaust g");
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j)
        for (const auto& [k, c] : L.bracket_basis(i, j).terms())
          if (L.basis(k).grade != L.basis(i).grade + L.basis(j).grade)
            f.add("[" + label(L, i) + ", " + label(L, j) + "] leaves g(i+j)");
    if (h.grade(2).size() != 1 || h.grade(-2).size() != 1) f.add("centre is not one-dimensional");
    for (std::size_t p : h.grade(1)) {
      const Root b = L.basis(p).root;
      const Root bp = L.gamma() - b;
      if (!L.roots().contains(bp) || L.basis(L.position(bp)).grade != 1) {
        f.add("gamma - " + b.label() + " is not in V+");
        continue;
      }
      const Rational n = L.structure_constant(b, bp);
      if (n != 1 && n != -1) f.add("N_{b, gamma-b} = " + n.get_str() + " for " + b.label());
    }
    const auto d = h.dims();
    r.data["dims"] = std::vector<std::size_t>(d.begin(), d.end());
    r.data["deleted_diagram"] = deleted_dynkin(L).str();
    f.finish(r);
  });
}

std::vector<CheckResult> verify_omega2(const OmegaSystem& sys, const Rational& s0) {
  const LieAlgebra& L = sys.algebra();
  const VermaModule M(L);
  const Element hg = L.coroot(L.gamma());
  std::vector<CheckResult> out;

  out.push_back(run_check("omega2.h_gamma_vanishes", "w2(H_gamma) = 0", [&](CheckResult& r) {
    const PBWElement w = sys.omega2(hg);
    r.status = w.is_zero() ? Status::Pass : Status::Fail;
    if (!w.is_zero()) r.witness = "w2(H_gamma) = " + M.str({w});
  }));

  out.push_back(run_check("omega2.h_gamma_eigenvalue", "H_gamma . w2(W) = -4 w2(W) for W in l", [&](CheckResult& r) {
    Failures f;
    for (std::size_t k = L.levi_begin(); k < L.levi_end(); ++k) {
      const PBWElement w = sys.omega2(Element::basis(k));
      const PBWElement lhs = M.act(hg, {w}).body.at(s0);
      if (!(lhs == UPoly(-4) * w)) f.add("W = " + label(L, k) + ": residual " + M.str({lhs - UPoly(-4) * w}));
    }
    f.finish(r);
  }));

  out.push_back(run_check("omega2.l_equivariance", "w2([Z,W]) = Z . w2(W) + 2 dchi(Z) w2(W) for Z, W in l", [&](CheckResult& r) {
    Failures f;
    UPoly cond;
    for (std::size_t z = L.levi_begin(); z < L.levi_end(); ++z)
      for (std::size_t w = L.levi_begin(); w < L.levi_end(); ++w) {
        const PBWElement ow = sys.omega2(Element::basis(w));
        PBWElement res = sys.omega2(L.bracket_basis(z, w)) - M.act(z, {ow}).body;
        res -= UPoly(2 * L.dchi(Element::basis(z))) * ow;
        for (const auto& [m, c] : res.terms()) cond = UPoly::gcd(cond, c);
        const PBWElement at = res.at(s0);
        if (!at.is_zero()) f.add("Z = " + label(L, z) + ", W = " + label(L, w) + ": residual " + M.str({at}));
      }
    r.data["holds_for"] = holds_for(cond);
    f.finish(r);
  }));

  out.push_back(run_check("omega2.n_annihilates", "X . w2(W) = 0 for X in n, W in l", [&](CheckResult& r) {
    Failures f;
    for (std::size_t x = L.n_begin(); x < L.n_end(); ++x)
      for (std::size_t w = L.levi_begin(); w < L.levi_end(); ++w) {
        const PBWElement y = M.act(x, {sys.omega2(Element::basis(w))}).body.at(s0);
        if (!y.is_zero()) f.add(label(L, x) + " . w2(" + label(L, w) + ") = " + M.str({y}));
      }
    f.finish(r);
  }));

  out.push_back(run_check("omega2.component_systems",
                          "span{w2(pr_C Z)} is q-stable at s* for each singleton component C of the deleted diagram",
                          [&](CheckResult& r) {
    Failures f;
    r.data["components"] = nlohmann::json::array();
    for (const auto& comp : deleted_dynkin(L).components) {
      if (comp.size() != 1) continue;
      std::vector<PBWElement> gens;
      for (const auto& Z : levi_basis(L)) gens.push_back(sys.omega2_component(comp, Z));
      gens = independent_subset(gens);
      SubmoduleCandidate F;
      F.label = "w2(C)";
      for (auto& g : gens) F.generators.push_back({g});
      const auto sv = singular_values(L, F);
      nlohmann::json cj;
      cj["component"] = "{a" + std::to_string(comp[0] + 1) + "}";
      cj["dim"] = gens.size();
      cj["special_values"] = sv.all ? nlohmann::json("all s") : rationals_json(sv.values);
      r.data["components"].push_back(cj);
      if (!sv.contains(s0)) f.add("component a" + std::to_string(comp[0] + 1) + " is not q-stable at s*: " + sv.witness);
    }
    f.finish(r);
  }));
  return out;
}

CheckResult verify_contraction_identity(const OmegaSystem& sys) {
  return run_check("omega2.contraction_identity",
                   "sum_eps w2([[X, X_-eps], [X_eps, Y]]) = c w2([X,Y]) for X in V+, Y in V-, with c = 2 the unique constant",
                   [&](CheckResult& r) {
    const LieAlgebra& L = sys.algebra();
    const Enveloping& U = sys.enveloping();
    std::optional<Rational> c;
    Failures f;
    std::size_t pairs = 0;
    struct Pair {
      PBWElement lhs;
      Element xy;
    };
    std::vector<Pair> data;
    for (std::size_t x : sys.vplus())
      for (std::size_t y : sys.vminus()) {
        ++pairs;
        PBWElement lhs;
        for (std::size_t k = 0; k < sys.vplus().size(); ++k) {
          const Element a = L.bracket_basis(x, sys.vminus()[k]);
          const Element b = L.bracket_basis(sys.vplus()[k], y);
          lhs += sys.omega2(L.bracket(a, b));
        }
        const Element xy = L.bracket_basis(x, y);
        const PBWElement rhs = sys.omega2(xy);
        data.push_back({lhs, xy});
        if (rhs.is_zero()) {
          if (!lhs.is_zero()) f.add("X = " + label(L, x) + ", Y = " + label(L, y) + ": w2([X,Y]) = 0 but left side " + U.str(lhs));
          continue;
        }
        const auto& [m0, r0] = *rhs.terms().begin();
        const Rational ratio_here = lhs.coeff(m0).constant_term() / r0.constant_term();
        if (!c) c = ratio_here;
        const PBWElement res = lhs - UPoly(*c) * rhs;
        if (!res.is_zero()) f.add("X = " + label(L, x) + ", Y = " + label(L, y) + ": residual " + U.str(res));
      }
    r.data["pairs"] = pairs;
    if (!c) {
      f.add("w2([X,Y]) vanishes for every pair; the constant is not determined");
    } else {
      r.data["constant"] = c->get_str();
      if (*c != 2) f.add("the unique constant is " + c->get_str() + ", not 2");
    }
    // Informational: constants p_C in lhs = 1/2 sum_C p_C w2(pr_C [X,Y]).
    const auto comps = deleted_dynkin(L).components;
    std::map<Word, std::size_t, WordOrder> rows;
    std::vector<std::vector<std::pair<std::size_t, PBWElement>>> cols(comps.size());
    std::vector<std::pair<std::size_t, PBWElement>> rhs_terms;
    for (std::size_t p = 0; p < data.size(); ++p) {
      for (std::size_t ci = 0; ci < comps.size(); ++ci)
        cols[ci].push_back({p, UPoly(Rational(1, 2)) * sys.omega2_component(comps[ci], data[p].xy)});
    }
    std::vector<std::vector<Rational>> eqs;  // rows: (p, monomial)
    std::map<std::pair<std::size_t, Word>, std::size_t> row_of;
    auto row = [&](std::size_t p, const Word& w) {
      auto key = std::make_pair(p, w);
      auto it = row_of.find(key);
      if (it != row_of.end()) return it->second;
      row_of.emplace(key, eqs.size());
      eqs.emplace_back(comps.size() + 1);
      return eqs.size() - 1;
    };
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
      for (const auto& [p, e] : cols[ci])
        for (const auto& [w, k] : e.terms()) eqs[row(p, w)][ci] += k.constant_term();
    for (std::size_t p = 0; p < data.size(); ++p)
      for (const auto& [w, k] : data[p].lhs.terms()) eqs[row(p, w)][comps.size()] += k.constant_term();
    Matrix A(eqs.size(), comps.size());
    std::vector<Rational> b(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (std::size_t j = 0; j < comps.size(); ++j) A(i, j) = eqs[i][j];
      b[i] = eqs[i][comps.size()];
    }
    nlohmann::json pc;
    if (auto sol = solve(A, b)) {
      const bool unique = nullspace(A).empty();
      for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        std::string name;
        for (int s : comps[ci]) name += (name.empty() ? "a" : ",a") + std::to_string(s + 1);
        pc[name] = unique ? (*sol)[ci].get_str() : "undetermined";
      }
    } else {
      pc = "no solution";
    }
    r.data["component_constants"] = pc;
    f.finish(r);
  });
}

SpecialValueOutcome solve_special_value(const OmegaSystem& sys, unsigned jobs) {
  SpecialValueOutcome out;
  out.entry = run_check("special_value.unique", "span{w3(Y) : Y in V-} is q-stable for exactly one rational s", [&](CheckResult& r) {
    out.values = singular_values(sys.algebra(), sys.omega3_span(), jobs);
    r.data["condition"] = out.values.condition.str();
    if (out.values.all) {
      r.data["special_values"] = "all s";
    } else {
      r.data["special_values"] = rationals_json(out.values.values);
    }
    if (!out.values.all && out.values.values.size() == 1) {
      out.s_star = out.values.values.front();
      r.data["s_star"] = out.s_star->get_str();
      r.data["bundle_index"] = Rational(-*out.s_star).get_str();
      r.status = Status::Pass;
    } else {
      r.status = Status::Fail;
      r.witness = "special values " + out.values.str() + (out.values.witness.empty() ? "" : "; " + out.values.witness);
    }
  });
  return out;
}

std::vector<CheckResult> verify_omega3_module(const OmegaSystem& sys, const Rational& s0) {
  const LieAlgebra& L = sys.algebra();
  const VermaModule M(L);
  const SubmoduleCandidate F = sys.omega3_span();
  std::vector<CheckResult> out;

  out.push_back(run_check("omega3.nonzero", "w3(Y) != 0 and the w3(Y) are independent, dim = dim V-", [&](CheckResult& r) {
    Failures f;
    std::vector<PBWElement> g;
    for (std::size_t i = 0; i < F.generators.size(); ++i) {
      if (F.generators[i].body.is_zero()) f.add("w3(" + label(L, sys.vminus()[i]) + ") = 0");
      g.push_back(F.generators[i].body);
    }
    const std::size_t d = independent_subset(g).size();
    if (d != sys.vminus().size()) f.add("span has dimension " + std::to_string(d));
    r.data["system_size"] = d;
    f.finish(r);
  }));

  out.push_back(run_check("omega3.n_annihilates", "X . w3(Y) = 0 for X in n, Y in V-", [&](CheckResult& r) {
    Failures f;
    for (std::size_t x = L.n_begin(); x < L.n_end(); ++x)
      for (std::size_t i = 0; i < F.generators.size(); ++i) {
        const PBWElement y = M.act(x, F.generators[i]).body.at(s0);
        if (!y.is_zero()) f.add(label(L, x) + " . w3(" + label(L, sys.vminus()[i]) + ") = " + M.str({y}));
      }
    f.finish(r);
  }));

  out.push_back(run_check("omega3.l_equivariance", "w3([Z,Y]) = Z . w3(Y) + 2 dchi(Z) w3(Y) for Z in l, Y in V-", [&](CheckResult& r) {
    Failures f;
    for (std::size_t z = L.levi_begin(); z < L.levi_end(); ++z)
      for (std::size_t i = 0; i < F.generators.size(); ++i) {
        const PBWElement& w = F.generators[i].body;
        PBWElement res = sys.omega3(L.bracket_basis(z, sys.vminus()[i])) - M.act(z, F.generators[i]).body.at(s0);
        res -= UPoly(2 * L.dchi(Element::basis(z))) * w;
        if (!res.is_zero()) f.add("Z = " + label(L, z) + ", Y = " + label(L, sys.vminus()[i]) + ": residual " + M.str({res}));
      }
    f.finish(r);
  }));

  out.push_back(run_check("omega3.h_gamma_eigenvalue", "H_gamma acts on span{w3} by -5", [&](CheckResult& r) {
    const Matrix a = module_action_matrix(L, F, L.coroot(L.gamma()), s0);
    const Rational c = a.rows() ? a(0, 0) : Rational(0);
    Matrix scalar = Matrix::identity(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) scalar(i, i) = c;
    const bool is_scalar = a == scalar;
    if (is_scalar) r.data["eigenvalue"] = c.get_str();
    r.status = is_scalar && c == -5 ? Status::Pass : Status::Fail;
    if (!is_scalar) r.witness = "H_gamma does not act by a scalar";
    else if (c != -5) r.witness = "H_gamma acts by " + c.get_str();
  }));

  out.push_back(run_check("omega3.x_gamma_acts_by_zero", "X_gamma acts on span{w3} by the zero matrix", [&](CheckResult& r) {
    const Matrix a = module_action_matrix(L, F, L.root_vector(L.gamma()), s0);
    r.status = a.is_zero() ? Status::Pass : Status::Fail;
    if (r.status == Status::Fail) r.witness = "matrix of X_gamma is nonzero";
  }));

  out.push_back(run_check("omega3.l_irreducible", "the l-module generated by any single w3(Y) is all of span{w3}", [&](CheckResult& r) {
    Failures f;
    for (std::size_t i = 0; i < F.generators.size(); ++i) {
      const std::size_t d = l_closure_dim(M, F.generators[i].body, s0);
      if (d != F.generators.size())
        f.add("l . w3(" + label(L, sys.vminus()[i]) + ") has dimension " + std::to_string(d));
    }
    f.finish(r);
  }));
  return out;
}

CheckResult verify_basis_independence(const OmegaSystem& sys, std::uint64_t seed, int trials) {
  return run_check("omega3.basis_independence",
                   "sum_i W_i^* w2([W_i, Y]) = w3(Y) for random bases W of V+ with form-dual bases W^* of V-",
                   [&](CheckResult& r) {
    const LieAlgebra& L = sys.algebra();
    const std::size_t m = sys.vplus().size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    Failures f;
    for (int t = 0; t < trials; ++t) {
      Matrix P(m, m);
      std::optional<Matrix> Q;
      do {
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) P(i, j) = entry(rng);
        Q = inverse(P);
      } while (!Q);
      std::vector<Element> W(m), Wd(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          W[i].add_term(sys.vplus()[j], P(i, j));
          Wd[i].add_term(sys.vminus()[j], (*Q)(j, i));
        }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
          if (L.killing(W[i], Wd[k]) != (i == k ? 1 : 0)) f.add("constructed dual basis is not dual");
      for (std::size_t y : sys.vminus()) {
        const Element Y = Element::basis(y);
        if (!(sys.omega3_with_basis(Y, W, Wd) == sys.omega3(Y)))
          f.add("trial " + std::to_string(t) + ", Y = " + label(L, y) + ": results differ");
      }
    }
    r.data["trials"] = trials;
    r.data["seed"] = seed;
    f.finish(r);
  });
}

CheckResult verify_pi_homomorphism(const WeylRealization& W, unsigned jobs) {
  return run_check("operator.pi_homomorphism", "Pi_s([Y1, Y2]) = [Pi_s(Y1), Pi_s(Y2)] and ord Pi_s(Y) <= 1", [&](CheckResult& r) {
    const LieAlgebra& L = W.algebra();
    const std::size_t d = L.dim();
    IndexedFailures f(d);
    parallel_for(d, jobs, [&](std::size_t i) {
      if (W.pi_op(i).order() > 1) f.slots[i].push_back("Pi(" + label(L, i) + ") has order > 1");
      for (std::size_t j = i + 1; j < d; ++j) {
        PolyDiffOp want(W.coords().n);
        for (const auto& [k, c] : L.bracket_basis(i, j).terms()) want += scaled(W.pi_op(k), c);
        if (!(op_commutator(W.pi_op(i), W.pi_op(j)) == want))
          f.slots[i].push_back("Y1 = " + label(L, i) + ", Y2 = " + label(L, j));
      }
    });
    f.finish(r);
  });
}

CheckResult verify_r_bracket_law(const WeylRealization& W, const Rational& s0) {
  return run_check("operator.r_bracket_law",
                   "[Pi(X), R(Y)] = R([Ad(n^-1)X, Y]_{V-}) + s dchi([Ad(n^-1)X, Y]_l) for X in g, Y in V-, at s = s*",
                   [&](CheckResult& r) {
    const LieAlgebra& L = W.algebra();
    const NbarCoords& X = W.coords();
    const auto h = heisenberg_grading(L);
    Failures f;
    UPoly cond;
    const MPoly s = MPoly::variable(X.nvars(), X.s_var());
    for (std::size_t x = 0; x < L.dim(); ++x) {
      const PolyElement A = ad_exp_inverse(L, X, Element::basis(x));
      for (std::size_t y : h.grade(-1)) {
        const PolyElement AY = poly_bracket(L, A, PolyElement::constant(X.nvars(), Element::basis(y)));
        PolyElement vminus(X.nvars());
        MPoly fn(X.nvars());
        for (const auto& [k, c] : AY.terms()) {
          if (L.basis(k).grade == -1) vminus.add_term(k, c);
          if (L.block_of(k) == Block::Levi) fn += c * L.dchi(Element::basis(k));
        }
        PolyDiffOp res = op_commutator(W.pi_op(x), W.r_generator(y)) - W.r_field(vminus);
        res -= PolyDiffOp::multiplication(X.n, s * fn);
        cond = UPoly::gcd(cond, s_condition(res));
        if (!res.specialize_s(s0).is_zero()) f.add("X = " + label(L, x) + ", Y = " + label(L, y));
      }
    }
    r.data["holds_for"] = holds_for(cond);
    f.finish(r);
  });
}

CheckResult verify_omega2_operator_law(const OmegaOperators& ops, const Rational& s0, unsigned jobs) {
  return run_check("operator.omega2_transformation_law",
                   "[Pi(X), Omega2(W)] = Omega2([Ad(n^-1)X, W]_l) - dchi((Ad(n^-1)X)_l) Omega2(W) for X in g, W in l",
                   [&](CheckResult& r) {
    const WeylRealization& W = ops.weyl();
    const LieAlgebra& L = W.algebra();
    const NbarCoords& X = W.coords();
    IndexedFailures f(L.dim());
    std::vector<UPoly> conds(L.dim());
    parallel_for(L.dim(), jobs, [&](std::size_t x) {
      const PolyElement A = ad_exp_inverse(L, X, Element::basis(x));
      MPoly dchiA(X.nvars());
      for (const auto& [k, c] : A.terms())
        if (L.block_of(k) == Block::Levi) dchiA += c * L.dchi(Element::basis(k));
      for (std::size_t w = L.levi_begin(); w < L.levi_end(); ++w) {
        const PolyElement AW = poly_bracket(L, A, PolyElement::constant(X.nvars(), Element::basis(w)));
        PolyDiffOp want(X.n);
        for (const auto& [k, c] : AW.terms()) {
          if (L.block_of(k) != Block::Levi) continue;
          PolyDiffOp t = ops.omega2(Element::basis(k));
          t *= c;
          want += t;
        }
        PolyDiffOp t = ops.omega2(Element::basis(w));
        t *= dchiA;
        want -= t;
        const PolyDiffOp res = op_commutator(W.pi_op(x), ops.omega2(Element::basis(w))) - want;
        conds[x] = UPoly::gcd(conds[x], s_condition(res));
        if (!res.specialize_s(s0).is_zero()) f.slots[x].push_back("X = " + label(L, x) + ", W = " + label(L, w));
      }
    });
    UPoly cond;
    for (const auto& c : conds) cond = UPoly::gcd(cond, c);
    r.data["holds_for"] = holds_for(cond);
    f.finish(r);
  });
}

CheckResult verify_omega3_operator_l_law(const OmegaOperators& ops, const Rational& s0) {
  return run_check("operator.omega3_l_law", "[Pi(Z), Omega3(Y)] = Omega3([Z,Y]) - dchi(Z) Omega3(Y) for Z in l, Y in V-",
                   [&](CheckResult& r) {
    const WeylRealization& W = ops.weyl();
    const LieAlgebra& L = W.algebra();
    const auto& sys = ops.system();
    Failures f;
    for (std::size_t z = L.levi_begin(); z < L.levi_end(); ++z) {
      const PolyDiffOp pz = W.pi_op(z).specialize_s(s0);
      for (std::size_t i = 0; i < sys.vminus().size(); ++i) {
        const PolyDiffOp& o = ops.omega3_basis()[i];
        PolyDiffOp want = ops.omega3(L.bracket_basis(z, sys.vminus()[i]));
        want -= scaled(o, L.dchi(Element::basis(z)));
        if (!(op_commutator(pz, o) == want)) f.add("Z = " + label(L, z) + ", Y = " + label(L, sys.vminus()[i]));
      }
    }
    f.finish(r);
  });
}

CheckResult verify_vplus_brackets_at_e(const OmegaOperators& ops, const Rational& s0, unsigned jobs) {
  return run_check("operator.vplus_brackets_vanish_at_e", "[Pi(X), Omega3(Y)]_e = 0 for X in V+, Y in V-", [&](CheckResult& r) {
    const WeylRealization& W = ops.weyl();
    const LieAlgebra& L = W.algebra();
    const auto& sys = ops.system();
    const std::size_t m = sys.vplus().size();
    std::vector<PointFunctional> fn(m * m);
    parallel_for(fn.size(), jobs, [&](std::size_t k) {
      fn[k] = eval_at_identity(op_commutator(W.pi_op(sys.vplus()[k / m]), ops.omega3_basis()[k % m]));
    });
    Failures f;
    UPoly cond;
    for (std::size_t k = 0; k < fn.size(); ++k) {
      cond = UPoly::gcd(cond, fn[k].condition());
      const PointFunctional at = fn[k].at(s0);
      if (!at.is_zero())
        f.add("X = " + label(L, sys.vplus()[k / m]) + ", Y = " + label(L, sys.vminus()[k % m]) + ": " + at.str(W.coords()));
    }
    r.data["pairs"] = fn.size();
    r.data["holds_for"] = holds_for(cond);
    f.finish(r);
  });
}

CheckResult verify_x_gamma_bracket(const OmegaOperators& ops, const Rational& s0) {
  return run_check("operator.x_gamma_bracket_vanishes_at_e", "[Pi(X_gamma), Omega3(Y)]_e = 0 for Y in V-", [&](CheckResult& r) {
    const WeylRealization& W = ops.weyl();
    const LieAlgebra& L = W.algebra();
    const auto& sys = ops.system();
    const PolyDiffOp px = W.pi_op(L.position(L.gamma())).specialize_s(s0);
    Failures f;
    for (std::size_t i = 0; i < sys.vminus().size(); ++i) {
      const PointFunctional at = eval_at_identity(op_commutator(px, ops.omega3_basis()[i]));
      if (!at.is_zero()) f.add("Y = " + label(L, sys.vminus()[i]) + ": " + at.str(W.coords()));
    }
    f.finish(r);
  });
}

CheckResult verify_nbar_brackets(const OmegaOperators& ops, const Rational& s0) {
  return run_check("operator.nbar_brackets_vanish", "[Pi(X), Omega3(Y)] = 0 identically for X in n-bar, Y in V-", [&](CheckResult& r) {
    const WeylRealization& W = ops.weyl();
    const LieAlgebra& L = W.algebra();
    const auto& sys = ops.system();
    Failures f;
    for (std::size_t x = L.nbar_begin(); x < L.nbar_end(); ++x) {
      const PolyDiffOp px = W.pi_op(x).specialize_s(s0);
      for (std::size_t i = 0; i < sys.vminus().size(); ++i)
        if (!op_commutator(px, ops.omega3_basis()[i]).is_zero())
          f.add("X = " + label(L, x) + ", Y = " + label(L, sys.vminus()[i]));
    }
    f.finish(r);
  });
}

namespace {

/// Functionals of the Omega3 operators at e as matrix columns over a common multi-index list.
struct FunctionalBasis {
  std::vector<MultiIndex> idx;
  Matrix cols;  // idx.size() x m
};

FunctionalBasis functional_basis(const OmegaOperators& ops) {
  FunctionalBasis fb;
  std::vector<PointFunctional> fs;
  std::set<MultiIndex> all;
  for (const auto& o : ops.omega3_basis()) {
    fs.push_back(eval_at_identity(o));
    for (const auto& [a, c] : fs.back().terms) all.insert(a);
  }
  fb.idx.assign(all.begin(), all.end());
  fb.cols = Matrix(fb.idx.size(), fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (std::size_t i = 0; i < fb.idx.size(); ++i) {
      auto it = fs[j].terms.find(fb.idx[i]);
      if (it != fs[j].terms.end()) {
        if (!it->second.is_constant()) throw Error("Omega3 functional depends on s");
        fb.cols(i, j) = it->second.constant_term();
      }
    }
  return fb;
}

}  // namespace

ConformalData verify_conformal_invariance(const OmegaOperators& ops, const Rational& s0, unsigned jobs) {
  ConformalData out;
  const WeylRealization& W = ops.weyl();
  const LieAlgebra& L = W.algebra();
  const auto& sys = ops.system();
  const std::size_t m = sys.vminus().size();
  FunctionalBasis fb;
  out.independence = run_check("operator.independent_at_e", "the functionals (Omega3(Y_i))_e are linearly independent",
                               [&](CheckResult& r) {
    fb = functional_basis(ops);
    const std::size_t rk = rank(fb.cols);
    r.data["rank"] = rk;
    r.status = rk == m ? Status::Pass : Status::Fail;
    if (rk != m) r.witness = "rank " + std::to_string(rk) + " < " + std::to_string(m);
  });
  out.b_matrix = run_check("operator.b_matrix",
                           "[Pi(Y), Omega3(Y_i)]_e = sum_j b(Y)_ji (Omega3(Y_j))_e for every basis Y of g; "
                           "b = 0 on n and n-bar, b(Z) = ad(Z)|V- - dchi(Z) on l",
                           [&](CheckResult& r) {
    if (out.independence.status != Status::Pass) throw Error("functionals at e are dependent");
    std::vector<Matrix> b(L.dim());
    IndexedFailures f(L.dim());
    parallel_for(L.dim(), jobs, [&](std::size_t y) {
      const PolyDiffOp py = W.pi_op(y).specialize_s(s0);
      Matrix by(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        const PointFunctional fn = eval_at_identity(op_commutator(py, ops.omega3_basis()[i]));
        std::vector<Rational> v(fb.idx.size());
        bool outside = false;
        for (const auto& [a, c] : fn.terms) {
          auto it = std::lower_bound(fb.idx.begin(), fb.idx.end(), a);
          if (it == fb.idx.end() || *it != a) {
            outside = true;
            break;
          }
          v[static_cast<std::size_t>(it - fb.idx.begin())] = c.constant_term();
        }
        auto sol = outside ? std::nullopt : solve(fb.cols, v);
        if (!sol) {
          f.slots[y].push_back("Y = " + label(L, y) + ", i = " + std::to_string(i) + ": not in the span, " + fn.str(W.coords()));
          continue;
        }
        for (std::size_t j = 0; j < m; ++j) by(j, i) = (*sol)[j];
      }
      // expected shape
      Matrix want(m, m);
      if (L.block_of(y) == Block::Levi) {
        const Rational d = L.dchi(Element::basis(y));
        for (std::size_t i = 0; i < m; ++i) {
          const Element zy = L.bracket_basis(y, sys.vminus()[i]);
          for (std::size_t j = 0; j < m; ++j) want(j, i) = zy.coeff(sys.vminus()[j]) - (i == j ? d : Rational(0));
        }
      }
      if (!(by == want)) f.slots[y].push_back("b(" + label(L, y) + ") does not have the expected form");
      b[y] = std::move(by);
    });
    f.finish(r);
    out.b = std::move(b);
    const Element hg = L.coroot(L.gamma());
    Matrix bhg(m, m);
    for (const auto& [k, c] : hg.terms())
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) bhg(i, j) += c * out.b[k](i, j);
    r.data["b_H_gamma_diagonal"] = m ? bhg(0, 0).get_str() : "";
  });
  return out;
}

std::vector<std::vector<MPoly>> structure_operator(const OmegaOperators& ops, const std::vector<Matrix>& b, const Element& Y) {
  const WeylRealization& W = ops.weyl();
  const LieAlgebra& L = W.algebra();
  const NbarCoords& X = W.coords();
  const std::size_t m = ops.system().vminus().size();
  if (b.size() != L.dim()) throw DomainError("structure_operator: need b(B_k) for every basis vector");
  std::vector<std::vector<MPoly>> C(m, std::vector<MPoly>(m, MPoly(X.nvars())));
  const PolyElement A = ad_exp_inverse(L, X, Y);
  for (const auto& [k, f] : A.terms())
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i)
        if (b[k](j, i) != 0) C[j][i] += f * b[k](j, i);
  return C;
}

CheckResult verify_structure_operator(const OmegaOperators& ops, const std::vector<Matrix>& b, const Rational& s0,
                                      const std::vector<std::size_t>& sample, unsigned jobs) {
  return run_check("operator.structure_operator",
                   "[Pi(Y), Omega3(Y_i)] = sum_j C(Y)_ji Omega3(Y_j) with C(Y)(n) = b(Ad(n^-1)Y), as polynomial identities",
                   [&](CheckResult& r) {
    const WeylRealization& W = ops.weyl();
    const LieAlgebra& L = W.algebra();
    const std::size_t m = ops.system().vminus().size();
    IndexedFailures f(sample.size());
    parallel_for(sample.size(), jobs, [&](std::size_t t) {
      const std::size_t y = sample[t];
      const auto C = structure_operator(ops, b, Element::basis(y));
      const PolyDiffOp py = W.pi_op(y).specialize_s(s0);
      for (std::size_t i = 0; i < m; ++i) {
        PolyDiffOp want(W.coords().n);
        for (std::size_t j = 0; j < m; ++j) {
          if (C[j][i].is_zero()) continue;
          PolyDiffOp o = ops.omega3_basis()[j];
          o *= C[j][i];
          want += o;
        }
        if (!(op_commutator(py, ops.omega3_basis()[i]) == want))
          f.slots[t].push_back("Y = " + label(L, y) + ", i = " + std::to_string(i));
      }
    });
    r.data["sample"] = nlohmann::json::array();
    for (std::size_t y : sample) r.data["sample"].push_back(label(L, y));
    f.finish(r);
  });
}

CheckResult verify_picture_consistency(const OmegaOperators& ops) {
  return run_check("picture.r_of_omega",
                   "R(w3(Y)) = sum_eps R(X_-eps) o Omega2([X_eps, Y]) for Y in V-, and R(w2(W)) = Omega2(W) for W in l",
                   [&](CheckResult& r) {
    const WeylRealization& W = ops.weyl();
    const LieAlgebra& L = W.algebra();
    const auto& sys = ops.system();
    Failures f;
    for (std::size_t i = 0; i < sys.vminus().size(); ++i)
      if (!(W.r_op(sys.omega3(Element::basis(sys.vminus()[i]))) == ops.omega3_basis()[i]))
        f.add("Y = " + label(L, sys.vminus()[i]));
    for (std::size_t w = L.levi_begin(); w < L.levi_end(); ++w)
      if (!(W.r_op(sys.omega2(Element::basis(w))) == ops.omega2(Element::basis(w)))) f.add("W = " + label(L, w));
    f.finish(r);
  });
}

CheckResult verify_intertwining(const WeylRealization& W, int max_degree, unsigned jobs) {
  return run_check("picture.nbar_invariance_of_r",
                   "[Pi_s(X), R(u)] = 0 for X in n-bar and every PBW monomial u of U(n-bar) of degree <= " + std::to_string(max_degree),
                   [&](CheckResult& r) {
    const LieAlgebra& L = W.algebra();
    const auto words = enumerate_monomials(nbar_generators(L), max_degree);
    IndexedFailures f(words.size());
    parallel_for(words.size(), jobs, [&](std::size_t k) {
      const PolyDiffOp ru = W.r_op(PBWElement::monomial(words[k]));
      for (std::size_t x = L.nbar_begin(); x < L.nbar_end(); ++x)
        if (!op_commutator(W.pi_op(x), ru).is_zero())
          f.slots[k].push_back("X = " + label(L, x) + ", u = " + Enveloping(L).str(PBWElement::monomial(words[k])));
    });
    r.data["monomials"] = words.size();
    f.finish(r);
  });
}

CheckResult run_negative_control(const LieAlgebra& L, unsigned jobs) {
  return run_check("negative_control.no_omega3_system",
                   "span{w3(Y) : Y in V-} is q-stable for no rational s, or the construction degenerates", [&](CheckResult& r) {
    const OmegaSystem sys(L);
    const SubmoduleCandidate F = sys.omega3_span();
    std::vector<PBWElement> g;
    std::size_t zeros = 0;
    for (const auto& v : F.generators) {
      if (v.body.is_zero()) ++zeros;
      g.push_back(v.body);
    }
    r.data["system_size"] = F.generators.size();
    if (zeros) {
      r.data["outcome"] = "degenerate: w3 vanishes on " + std::to_string(zeros) + " basis vectors";
      r.status = Status::Pass;
      return;
    }
    const std::size_t d = independent_subset(g).size();
    if (d != g.size()) {
      r.data["outcome"] = "degenerate: span of w3 has dimension " + std::to_string(d);
      r.status = Status::Pass;
      return;
    }
    const auto sv = singular_values(L, F, jobs);
    r.data["special_values"] = sv.all ? nlohmann::json("all s") : rationals_json(sv.values);
    r.data["condition"] = sv.condition.str();
    if (!sv.all && sv.values.empty()) {
      r.data["outcome"] = "empty special-value set";
      r.data["obstruction"] = sv.witness;
      r.status = Status::Pass;
    } else {
      r.data["outcome"] = "special values exist";
      r.status = Status::Fail;
      r.witness = "unexpected special values " + sv.str();
    }
  });
}

CheckResult verify_reducibility(const OmegaSystem& sys, const Rational& s0, int max_degree) {
  return run_check("reducibility.verma_hom",
                   "phi(u (x) e_i) = u w3(Y_i) satisfies phi(x . v) = x . phi(v) for x in g; image has H_gamma-grade <= -3",
                   [&](CheckResult& r) {
    const LieAlgebra& L = sys.algebra();
    const Enveloping& U = sys.enveloping();
    const VermaModule M(L);
    const SubmoduleCandidate F = sys.omega3_span();
    const std::size_t m = F.generators.size();
    const InducedModule I(L, q_action_matrices(L, F, s0));
    auto phi = [&](const std::vector<PBWElement>& v) {
      PBWElement out;
      for (std::size_t i = 0; i < m; ++i)
        if (!v[i].is_zero()) out += U.multiply(v[i], F.generators[i].body);
      return out;
    };
    Failures f;
    std::size_t tested = 0;
    int max_grade = -1000;
    for (const auto& w : enumerate_monomials(nbar_generators(L), max_degree))
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<PBWElement> v(m);
        v[i] = PBWElement::monomial(w);
        const PBWElement pv = phi(v);
        for (const auto& [mono, c] : pv.terms()) max_grade = std::max(max_grade, U.grade(mono));
        for (std::size_t x = 0; x < L.dim(); ++x) {
          ++tested;
          const PBWElement lhs = phi(I.act(x, v));
          const PBWElement rhs = M.act(x, {pv}).body.at(s0);
          if (!(lhs == rhs)) f.add("x = " + label(L, x) + ", u = " + U.str(PBWElement::monomial(w)) + ", i = " + std::to_string(i));
        }
      }
    const Matrix h = module_action_matrix(L, F, L.coroot(L.gamma()), s0);
    r.data["pairs_tested"] = tested;
    r.data["image_max_grade"] = max_grade;
    r.data["h_gamma_on_E"] = m ? h(0, 0).get_str() : "";
    r.data["h_gamma_on_highest_line"] = Rational(2 * s0).get_str();
    r.data["verma_parameter"] = s0.get_str();
    if (m == 0 || F.generators[0].body.is_zero()) f.add("image is zero");
    if (max_grade > -3) f.add("image reaches H_gamma-grade " + std::to_string(max_grade));
    f.finish(r);
  });
}

}  // namespace cisys
