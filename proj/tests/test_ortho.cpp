#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "gramqfi/cat.hpp"
#include "gramqfi/engine.hpp"
#include "gramqfi/linalg.hpp"
#include "gramqfi/ortho.hpp"

using namespace gramqfi;

TEST_CASE("orthonormalize reproduces the branch mixture spectrum") {
  CatConfig cfg;
  cfg.c = 0.5;
  cfg.alpha = 1.0;
  const OrthoModel om = orthonormalize(build_c_model(cfg));
  const EigenPairs ep = herm_eig(om.rho);

  const double s = cat_fringe(cfg.alpha);
  const double norm = 1.0 / (2.0 * (1.0 + s * cfg.c));
  const double lo = (1.0 - s) * (1.0 - cfg.c) * norm;
  const double hi = (1.0 + s) * (1.0 + cfg.c) * norm;
  REQUIRE(ep.eigenvalues.size() == 2);
  CHECK(ep.eigenvalues(0) == doctest::Approx(lo).epsilon(1e-12));
  CHECK(ep.eigenvalues(1) == doctest::Approx(hi).epsilon(1e-12));
  CHECK(om.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("the four-element frame still carries a rank-two state") {
  CatConfig cfg;
  cfg.c = 0.3;
  cfg.alpha = 1.1;
  const OrthoModel om = orthonormalize(build_alpha_model(cfg));
  const EigenPairs ep = herm_eig(om.rho);
  REQUIRE(ep.eigenvalues.size() == 4);
  CHECK(std::abs(ep.eigenvalues(0)) < 1e-10);
  CHECK(std::abs(ep.eigenvalues(1)) < 1e-10);
  CHECK(ep.eigenvalues(3) > 0.5);
}

TEST_CASE("frame choice does not change the information matrix") {
  CatConfig cfg;
  cfg.c = 0.6;
  cfg.alpha = 0.8;
  const ModelMatrices model = build_alpha_model(cfg);
  const EigenQfi a = eigen_qfi(orthonormalize(model, OrthoFrame::MetricSqrt));
  const EigenQfi b = eigen_qfi(orthonormalize(model, OrthoFrame::Cholesky));
  CHECK((a.qfi.h - b.qfi.h).norm() <= 1e-10 * std::max(1.0, a.qfi.h.norm()));
  CHECK((a.qfi.gamma - b.qfi.gamma).norm() <= 1e-10);
  CHECK(!a.divergence_warning);
  CHECK(!b.divergence_warning);
}

TEST_CASE("eigendecomposition route agrees with the closed form") {
  CatConfig cfg;
  cfg.c = 0.5;
  cfg.alpha = 1.0;
  const EigenQfi eq = eigen_qfi(orthonormalize(build_c_model(cfg)));
  const CatJointQfi ref = closed_form_qfi_cat(cfg);
  CHECK(eq.qfi.h(0, 0) ==
        doctest::Approx(ref.h(0, 0)).epsilon(1e-10));
}

TEST_CASE("eigendecomposition route agrees with the contraction engine") {
  CatConfig cfg;
  cfg.c = 0.2;
  cfg.alpha = 1.4;
  const ModelMatrices model = build_alpha_model(cfg);
  const QfiResult direct = qfi_gamma(model, solve_slds(model));
  const EigenQfi eq = eigen_qfi(orthonormalize(model));
  CHECK((direct.h - eq.qfi.h).norm() <=
        1e-8 * std::max(1.0, direct.h.norm()));
  CHECK((direct.gamma - eq.qfi.gamma).norm() <= 1e-8);
}

TEST_CASE("derivative mass on the kernel raises the divergence flag") {
  OrthoModel om;
  om.rho = CMatrix::Zero(2, 2);
  om.rho(0, 0) = 1.0;
  om.frame = CMatrix::Identity(2, 2);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  om.drho.push_back(d);
  const EigenQfi eq = eigen_qfi(om);
  CHECK(eq.divergence_warning);
  CHECK(eq.dropped_mass[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  // coherences into the kernel survive at full weight
  OrthoModel om2 = om;
  om2.drho[0] = CMatrix::Zero(2, 2);
  om2.drho[0](0, 1) = 0.5;
  om2.drho[0](1, 0) = 0.5;
  const EigenQfi eq2 = eigen_qfi(om2);
  CHECK(!eq2.divergence_warning);
  CHECK(eq2.dropped_mass[0] == 0.0);
}

TEST_CASE("an absurd floor drops every pair") {
  OrthoModel om;
  om.rho = CMatrix::Identity(2, 2) * 0.5;
  om.frame = CMatrix::Identity(2, 2);
  om.drho.push_back(CMatrix::Zero(2, 2));
  CHECK_THROWS_AS(eigen_qfi(om, 10.0), DegenerateFloor);
  CHECK_THROWS_AS(eigen_qfi(om, 0.0), DegenerateFloor);
}
