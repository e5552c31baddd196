// Acceptance gate: one test case and one printed verdict line per criterion.
// Registry checks are reused where a criterion maps onto one exactly; the
// remaining clauses are evaluated inline against the core library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <doctest.h>

#include "gramqfi/cat.hpp"
#include "gramqfi/engine.hpp"
#include "gramqfi/ortho.hpp"
#include "gramqfi/validation.hpp"

using namespace gramqfi;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const CheckSpec& find_check(const std::string& name) {
  for (const CheckSpec& spec : validation_checks()) {
    if (spec.name == name) return spec;
  }
  throw IndexOutOfRange("no validation check named '" + name + "'");
}

CheckResult run_check(const std::string& name, double tol) {
  return find_check(name).run(tol);
}

void report(int number, const std::string& name, bool passed, double observed,
            double tol, const std::string& detail = "") {
  std::printf("criterion %d (%s): %s observed=%.3e tol=%.1e%s%s\n", number,
              name.c_str(), passed ? "PASS" : "FAIL", observed, tol,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

void report(int number, const CheckResult& r) {
  report(number, r.name, r.passed, r.observed, r.tolerance, r.detail);
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

std::vector<double> amplitude_grid() {
  std::vector<double> g;
  for (int j = 1; j <= 10; ++j) g.push_back(0.3 * j);
  return g;
}

double solved_h(const ModelMatrices& model) {
  const SldSolution slds = solve_slds(model);
  return qfi_gamma(model, slds).h(0, 0);
}

}  // namespace

TEST_CASE("criterion 1: visibility information on the grid") {
  const CheckResult r = run_check("closed-form-hcc", 1e-8);
  const bool in_time = r.seconds <= 1.0;
  report(1, r.name, r.passed && in_time, r.observed, r.tolerance,
         in_time ? r.detail
                 : "grid runtime " + std::to_string(r.seconds) + " s over 1 s");
  CHECK(r.passed);
  CHECK(in_time);
}

TEST_CASE("criterion 2: joint amplitude and cross entries on the grid") {
  const CheckResult r = run_check("closed-form-joint", 1e-8);
  report(2, r);
  CHECK(r.passed);
}

TEST_CASE("criterion 3: mean SLD commutators vanish") {
  const CheckResult r = run_check("weak-commutativity", 1e-10);
  report(3, r);
  CHECK(r.passed);
}

TEST_CASE("criterion 4: displacement information, boundary rows included") {
  const CheckResult grid = run_check("closed-form-displacement", 1e-8);

  // pure-cat row against its reduced closed form, fully mixed row against 4
  double worst_pure = 0.0;
  double worst_mixed = 0.0;
  for (double a : amplitude_grid()) {
    const double s = cat_fringe(a);
    CatConfig pure;
    pure.c = 1.0;
    pure.alpha = a;
    const double reduced = 4.0 * (4.0 * a * a + 1.0 + s) / (1.0 + s);
    worst_pure = std::max(
        worst_pure, rel_err(solved_h(build_displacement_model(pure)), reduced));

    CatConfig mixed;
    mixed.c = 0.0;
    mixed.alpha = a;
    worst_mixed = std::max(
        worst_mixed,
        std::abs(solved_h(build_displacement_model(mixed)) - 4.0));
  }
  const bool pure_ok = worst_pure <= 1e-8;
  const bool mixed_ok = worst_mixed <= 1e-10;
  const bool passed = grid.passed && pure_ok && mixed_ok;
  std::string detail = grid.detail;
  if (!pure_ok) detail = "pure-cat row off by " + std::to_string(worst_pure);
  if (!mixed_ok) {
    detail = "fully mixed row deviates from 4 by " +
             std::to_string(worst_mixed);
  }
  report(4, "displacement-information", passed,
         std::max(grid.observed, std::max(worst_pure, worst_mixed)),
         grid.tolerance, detail);
  CHECK(grid.passed);
  CHECK(pure_ok);
  CHECK(mixed_ok);
}

TEST_CASE("criterion 5: reference SLDs") {
  const CheckResult r = run_check("sld-closed-forms", 1e-9);
  report(5, r);
  CHECK(r.passed);
}

TEST_CASE("criterion 6: eigendecomposition oracle agreement") {
  const auto t0 = Clock::now();
  const CheckResult r = run_check("oracle-equivalence", 1e-8);

  // the registry check covers the joint family and the randomized models;
  // add the single-parameter families of the suite
  double worst_extra = 0.0;
  for (double c : {0.1, 0.5, 0.9}) {
    for (double a : {0.5, 1.0, 2.0}) {
      CatConfig cfg;
      cfg.c = c;
      cfg.alpha = a;
      for (const ModelMatrices& model :
           {build_c_model(cfg), build_displacement_model(cfg)}) {
        const SldSolution slds = solve_slds(model);
        const QfiResult direct = qfi_gamma(model, slds);
        const EigenQfi oracle = eigen_qfi(orthonormalize(model));
        const double scale =
            std::max(1.0, oracle.qfi.h.cwiseAbs().maxCoeff());
        worst_extra = std::max(
            worst_extra,
            (oracle.qfi.h - direct.h).cwiseAbs().maxCoeff() / scale);
        worst_extra = std::max(
            worst_extra,
            (oracle.qfi.gamma - direct.gamma).cwiseAbs().maxCoeff() / scale);
      }
    }
  }
  const double seconds = elapsed(t0);
  const bool extra_ok = worst_extra <= 1e-8;
  const bool in_time = seconds <= 10.0;
  report(6, "oracle-equivalence", r.passed && extra_ok && in_time,
         std::max(r.observed, worst_extra), r.tolerance,
         in_time ? r.detail
                 : "runtime " + std::to_string(seconds) + " s over 10 s");
  CHECK(r.passed);
  CHECK(extra_ok);
  CHECK(in_time);
}

TEST_CASE("criterion 7: asymptotic limits") {
  double worst = 0.0;
  std::string detail;

  for (double c : {0.0, 0.3, 0.6, 0.9}) {
    CatConfig cfg;
    cfg.c = c;
    cfg.alpha = 5.0;
    const double err =
        rel_err(solved_h(build_c_model(cfg)), 1.0 / (1.0 - c * c)) / 1e-6;
    if (err > worst) {
      worst = err;
      detail = "visibility limit c=" + std::to_string(c);
    }
  }
  for (double c : {0.2, 0.5, 1.0}) {
    CatConfig cfg;
    cfg.c = c;
    cfg.alpha = 7.0;
    const double limit = 16.0 * c * c * mean_photon_cat(cfg) + 4.0;
    const double err =
        rel_err(closed_form_qfi_displacement(cfg), limit) / 1e-3;
    if (err > worst) {
      worst = err;
      detail = "displacement limit c=" + std::to_string(c);
    }
  }
  {
    SqueezedConfig cfg;
    cfg.r = 3.0;
    cfg.gammabar = 0.5;
    const double limit = 4.0 / (1.0 - std::exp(-cfg.gammabar));
    const double err = rel_err(qfi_squeezed(cfg), limit) / 5e-3;
    if (err > worst) {
      worst = err;
      detail = "squeezing limit";
    }
  }
  const bool passed = worst <= 1.0;
  report(7, "asymptotes", passed, worst, 1.0, passed ? "" : detail);
  CHECK(passed);
}

TEST_CASE("criterion 8: figure shapes") {
  const CheckResult shapes = run_check("figure-shapes", 1.0);

  LossyConfig lossy;
  lossy.alpha0 = 6.0;
  lossy.gammabar = 0.5;
  const double decohered = closed_form_qfi_displacement(lossy_map(lossy));
  const double coherent_err = rel_err(decohered, 4.0);
  const bool coherent_ok = coherent_err <= 0.05;

  report(8, "figure-shapes", shapes.passed && coherent_ok,
         std::max(shapes.observed, coherent_err / 0.05), 1.0,
         coherent_ok ? shapes.detail
                     : "decohered large cat off the coherent value by " +
                           std::to_string(coherent_err));
  CHECK(shapes.passed);
  CHECK(coherent_ok);
}

TEST_CASE("criterion 9: invariances and the full suite") {
  const auto t0 = Clock::now();
  const std::vector<CheckResult> all = run_validation();
  const double seconds = elapsed(t0);

  const auto named = [&all](const std::string& name) -> const CheckResult& {
    for (const CheckResult& r : all) {
      if (r.name == name) return r;
    }
    throw IndexOutOfRange("check '" + name + "' missing from the suite");
  };

  const std::vector<std::pair<std::string, double>> invariants = {
      {"gauge-invariance", 1e-8},
      {"basis-enlargement", 1e-10},
      {"metric-contraction", 1e-10},
      {"finite-difference", 1e-6},
  };
  bool invariants_ok = true;
  double worst = 0.0;
  std::string detail;
  for (const auto& [name, tol] : invariants) {
    const CheckResult& r = named(name);
    CHECK(r.tolerance == tol);  // suite defaults carry the contract
    worst = std::max(worst, r.observed / tol);
    if (!r.passed || r.observed > tol) {
      invariants_ok = false;
      detail = name + " at " + std::to_string(r.observed);
    }
  }

  std::size_t failed = 0;
  for (const CheckResult& r : all) {
    if (!r.passed) ++failed;
  }
  const bool all_ok = failed == 0;
  const bool in_time = seconds < 60.0;
  if (!all_ok) detail = std::to_string(failed) + " suite checks failed";
  if (!in_time) {
    detail = "suite runtime " + std::to_string(seconds) + " s over 60 s";
  }
  report(9, "invariances-and-suite", invariants_ok && all_ok && in_time,
         worst, 1.0, detail);
  CHECK(invariants_ok);
  CHECK(all_ok);
  CHECK(in_time);
}
