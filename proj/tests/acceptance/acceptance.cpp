// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cisys/omega.hpp"

using namespace cisys;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void require(const CheckResult& r) {
    require(r.status == Status::Pass, r.name + ": " + status_str(r.status) + (r.witness.empty() ? "" : " (" + r.witness + ")"));
  }
};

LieAlgebra algebra(const char* t) { return build_chevalley(build_root_system(RootSystemSpec::parse(t))); }

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  static CheckResult missing;
  missing.name = name + " (missing)";
  missing.status = Status::Fail;
  return missing;
}

bool all_pass(const std::vector<bool>& v) {
  for (bool b : v)
    if (!b) return false;
  return true;
}

}  // namespace

int main() {
  const LieAlgebra L = algebra("D4");
  const OmegaSystem sys(L);
  std::optional<Rational> s_star;
  std::vector<bool> results;

  auto criterion = [&](int k, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(dt < budget, "took " + std::to_string(dt) + " s, budget " + std::to_string(budget) + " s");
    std::printf("%s  criterion %2d  %-38s %8.3f s\n", o.ok ? "PASS" : "FAIL", k, title.c_str(), dt);
    for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
    std::fflush(stdout);
    results.push_back(o.ok);
  };

  criterion(1, "Chevalley normalizations and Jacobi", 10, [&](Outcome& o) {
    o.require(check_chevalley(L, true));
    std::size_t roots = 0;
    for (const Root& a : L.roots().all_roots()) {
      ++roots;
      o.require(L.killing(L.root_vector(a), L.root_vector(-a)) == 1, "B(X_a, X_-a) != 1 for " + a.label());
    }
    o.require(roots == 24, "root count " + std::to_string(roots));
  });

  criterion(2, "Heisenberg grading and deleted diagram", 1, [&](Outcome& o) {
    o.require(check_grading(L));
    o.require(heisenberg_grading(L).dims() == std::array<std::size_t, 5>{1, 8, 10, 8, 1}, "D4 dims");
    const LieAlgebra L5 = algebra("D5");
    o.require(check_grading(L5));
    o.require(heisenberg_grading(L5).dims() == std::array<std::size_t, 5>{1, 12, 19, 12, 1}, "D5 dims");
    const auto dd = deleted_dynkin(L);
    o.require(dd.components.size() == 3, "component count");
    for (const auto& c : dd.components) o.require(c.size() == 1, "non-singleton component");
  });

  // The special value is needed by criteria 3 and later; solve it first.
  const SpecialValueOutcome sv = solve_special_value(sys, 1);
  s_star = sv.s_star;
  const Rational s0 = s_star ? *s_star : Rational(0);

  criterion(3, "omega2 suite at s*", 30, [&](Outcome& o) {
    o.require(s_star.has_value(), "no unique special value");
    const auto rs = verify_omega2(sys, s0);
    for (const char* n : {"omega2.h_gamma_vanishes", "omega2.h_gamma_eigenvalue", "omega2.l_equivariance", "omega2.n_annihilates"})
      o.require(find(rs, n));
  });

  criterion(4, "contraction identity with constant 2", 30, [&](Outcome& o) {
    const CheckResult r = verify_contraction_identity(sys);
    o.require(r);
    o.require(r.data.value("pairs", 0) == 64, "pair count " + r.data.value("pairs", nlohmann::json(0)).dump());
    o.require(r.data.value("constant", std::string()) == "2", "constant " + r.data.value("constant", std::string()));
  });

  criterion(5, "unique special value and omega3 module", 120, [&](Outcome& o) {
    o.require(sv.entry);
    const auto rs = verify_omega3_module(sys, s0);
    for (const char* n : {"omega3.nonzero", "omega3.n_annihilates", "omega3.l_equivariance", "omega3.h_gamma_eigenvalue"})
      o.require(find(rs, n));
    const auto& h = find(rs, "omega3.h_gamma_eigenvalue");
    o.require(h.data.value("eigenvalue", std::string()) == "-5", "H_gamma eigenvalue " + h.data.dump());
  });

  const WeylRealization W(L);
  const OmegaOperators ops(sys, W);

  criterion(6, "operator picture at s*", 300, [&](Outcome& o) {
    o.require(verify_vplus_brackets_at_e(ops, s0, 1));
    o.require(verify_x_gamma_bracket(ops, s0));
    o.require(verify_nbar_brackets(ops, s0));
    const ConformalData cd = verify_conformal_invariance(ops, s0, 1);
    o.require(cd.independence);
    o.require(cd.b_matrix);
    std::vector<std::size_t> sample(L.dim());
    for (std::size_t i = 0; i < sample.size(); ++i) sample[i] = i;
    o.require(verify_structure_operator(ops, cd.b, s0, sample, 1));
  });

  criterion(7, "picture consistency", 120, [&](Outcome& o) {
    o.require(verify_picture_consistency(ops));
    o.require(verify_intertwining(W, 3, 1));
  });

  criterion(8, "basis independence, 5 random bases", 30, [&](Outcome& o) {
    const CheckResult r = verify_basis_independence(sys, 20261014, 5);
    o.require(r);
    o.require(r.data.value("trials", 0) == 5, "trial count");
  });

  criterion(9, "negative controls D5 and A3", 600, [&](Outcome& o) {
    for (const char* t : {"D5", "A3"}) {
      const LieAlgebra C = algebra(t);
      const CheckResult r = run_negative_control(C, 1);
      o.require(r);
      o.require(r.data.value("special_values", nlohmann::json("missing")) == nlohmann::json::array(),
                std::string(t) + " special values " + r.data.dump());
    }
  });

  criterion(10, "reducibility witness", 60, [&](Outcome& o) {
    const CheckResult r = verify_reducibility(sys, s0);
    o.require(r);
    o.require(r.data.value("h_gamma_on_E", std::string()) != r.data.value("h_gamma_on_highest_line", std::string()),
              "eigenvalues coincide");
  });

  const bool ok = all_pass(results);
  std::printf("%s  all criteria\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
