#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "gramqfi/cat.hpp"
#include "gramqfi/engine.hpp"
#include "gramqfi/linalg.hpp"

using namespace gramqfi;

namespace {

const Complex kI(0.0, 1.0);

// Concrete non-orthogonal frame in C^3 used to cross-check the contraction
// calculus against explicit bras and kets.
std::vector<CVector> frame_vectors() {
  std::vector<CVector> v(3, CVector(3));
  v[0] << 1.0, 0.0, 0.0;
  v[1] << 0.6, 0.8, 0.0;
  v[2] << 0.3, 0.2 * kI, 0.9;
  return v;
}

CMatrix frame_gramian(const std::vector<CVector>& v) {
  const Index n = static_cast<Index>(v.size());
  CMatrix s(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) s(i, j) = v[i].dot(v[j]);
  }
  return s;
}

// Sum_ij M_ij |v_i><v_j| as a dense operator.
CMatrix assemble(const std::vector<CVector>& v, const CMatrix& m) {
  const Index dim = v.front().size();
  CMatrix out = CMatrix::Zero(dim, dim);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      out += m(i, j) * (v[i] * v[j].adjoint());
    }
  }
  return out;
}

ModelMatrices tiny_pure_model() {
  // rho = |0><0| in an orthonormal two-element basis.
  ModelMatrices model;
  model.s = CMatrix::Identity(2, 2);
  model.r = CMatrix::Zero(2, 2);
  model.r(0, 0) = 1.0;
  return model;
}

}  // namespace

TEST_CASE("state_expectation matches explicit bra-ket contraction") {
  const std::vector<CVector> v = frame_vectors();
  const CMatrix s = frame_gramian(v);

  CMatrix r(3, 3);
  r << 0.5, 0.1 * kI, 0.0,
       -0.1 * kI, 0.3, 0.05,
       0.0, 0.05, 0.2;
  r = (0.5 * (r + r.adjoint())).eval();
  // normalize to unit trace in operator form
  r /= (r * s).trace().real();

  CMatrix x(3, 3);
  x << 1.0, 0.4, -0.2 * kI,
       0.4, -0.5, 0.1,
       0.2 * kI, 0.1, 0.25;
  x = (0.5 * (x + x.adjoint())).eval();

  ModelMatrices model;
  model.r = r;
  model.s = s;

  const CMatrix rho = assemble(v, r);
  const CMatrix xop = assemble(v, x);
  const Complex direct = (rho * xop).trace();
  const Complex contracted = state_expectation(model, x);
  CHECK(std::abs(direct - contracted) < 1e-12);

  // and the commutator route
  CMatrix y(3, 3);
  y << 0.2, 0.3 * kI, 0.0,
       -0.3 * kI, 0.0, 0.7,
       0.0, 0.7, -0.1;
  const CMatrix yop = assemble(v, y);
  const Complex comm_direct = (rho * (xop * yop - yop * xop)).trace();
  CHECK(std::abs(comm_direct - commutator_expectation(model, x, y)) < 1e-12);
}

TEST_CASE("information matrix is invariant under basis reordering") {
  CatConfig cfg;
  cfg.c = 0.4;
  cfg.alpha = 1.2;
  const ModelMatrices model = build_alpha_model(cfg);
  const QfiResult qfi = qfi_gamma(model, solve_slds(model));

  // reverse the basis order
  const Index n = model.dim();
  CMatrix perm = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) perm(i, n - 1 - i) = 1.0;
  ModelMatrices shuffled;
  shuffled.r = perm.adjoint() * model.r * perm;
  shuffled.s = perm.adjoint() * model.s * perm;
  for (const CMatrix& d : model.d) {
    shuffled.d.push_back(perm.adjoint() * d * perm);
  }
  const QfiResult qfi2 = qfi_gamma(shuffled, solve_slds(shuffled));
  CHECK((qfi.h - qfi2.h).norm() <= 1e-11 * std::max(1.0, qfi.h.norm()));
  CHECK((qfi.gamma - qfi2.gamma).norm() <= 1e-11);
}

TEST_CASE("SLDs have zero mean in the state") {
  CatConfig cfg;
  cfg.c = 0.7;
  cfg.alpha = 0.9;
  const ModelMatrices model = build_alpha_model(cfg);
  const SldSolution slds = solve_slds(model);
  for (const CMatrix& l : slds.l) {
    CHECK(std::abs(state_expectation(model, l)) < 1e-9);
  }
}

TEST_CASE("solve_slds reports a derivative that leaves the support") {
  ModelMatrices model = tiny_pure_model();
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;  // weight on the kernel-kernel block
  model.d.push_back(d);
  CHECK_THROWS_AS(solve_slds(model), SolverFailure);
}

TEST_CASE("solve_slds on a rank-deficient state keeps a clean residual") {
  ModelMatrices model = tiny_pure_model();
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 1) = 1.0;
  d(1, 0) = 1.0;  // support-kernel coherence, solvable
  model.d.push_back(d);
  const SldSolution slds = solve_slds(model);
  CHECK(slds.residuals[0] < 1e-12);
  CHECK(slds.rank_deficiencies[0] == 1);  // kernel-kernel gauge direction
  CHECK(hermiticity_defect(slds.l[0]) < 1e-12);
  // the minimum-norm rule leaves the gauge block empty
  CHECK(std::abs(slds.l[0](1, 1)) < 1e-12);
}

TEST_CASE("embed_zero_padded") {
  CMatrix small(2, 2);
  small << 1.0, 2.0 * kI, -2.0 * kI, 3.0;
  const CMatrix big = embed_zero_padded(small, {0, 2}, 4);
  CHECK(big.rows() == 4);
  CHECK(std::abs(big(0, 0) - Complex(1.0)) == 0.0);
  CHECK(std::abs(big(0, 2) - 2.0 * kI) == 0.0);
  CHECK(std::abs(big(2, 0) + 2.0 * kI) == 0.0);
  CHECK(std::abs(big(2, 2) - Complex(3.0)) == 0.0);
  CHECK(big.cwiseAbs().sum() == doctest::Approx(8.0));

  CHECK_THROWS_AS(embed_zero_padded(small, {0, 4}, 4), IndexOutOfRange);
  CHECK_THROWS_AS(embed_zero_padded(small, {1, 1}, 4),
                  ModelInvariantViolation);
  CHECK_THROWS_AS(embed_zero_padded(small, {0}, 4), DimensionMismatch);
}

TEST_CASE("tilde transform round trip") {
  const std::vector<CVector> v = frame_vectors();
  const CMatrix s = frame_gramian(v);
  CMatrix a(3, 3);
  a << 0.3, 0.1, 0.2 * kI,
       0.1, -0.4, 0.0,
       -0.2 * kI, 0.0, 0.9;
  a = (0.5 * (a + a.adjoint())).eval();
  const CMatrix back = from_tilde(to_tilde(a, s), s);
  CHECK((back - a).norm() < 1e-12);

  CHECK_THROWS_AS(from_tilde(a, CMatrix::Zero(3, 3)), SingularMetric);
}

TEST_CASE("reparameterize transforms congruently") {
  CatConfig cfg;
  cfg.c = 0.5;
  cfg.alpha = 1.0;
  const ModelMatrices model = build_alpha_model(cfg);
  const SldSolution slds = solve_slds(model);
  const QfiResult qfi = qfi_gamma(model, slds);

  RMatrix b(2, 2);
  b << 2.0, 1.0, 0.5, -1.0;
  const Reparameterized rep = reparameterize(model, qfi, slds, b);

  const RMatrix expect_h = b * qfi.h * b.transpose();
  CHECK((rep.qfi.h - expect_h).norm() <= 1e-13 * std::max(1.0, expect_h.norm()));
  for (int m = 0; m < 2; ++m) {
    const CMatrix expect_d = b(m, 0) * model.d[0] + b(m, 1) * model.d[1];
    CHECK((rep.model.d[m] - expect_d).norm() < 1e-14);
    CHECK(rep.slds.residuals[m] <= 1e-9);
  }
  CHECK(rep.model.parameter_names[0] == "theta0");
  CHECK(rep.model.parameter_names[1] == "theta1");

  // Gamma transforms congruently as well, via the recomputation
  const RMatrix expect_g = b * qfi.gamma * b.transpose();
  CHECK((rep.qfi.gamma - expect_g).norm() <= 1e-9);

  RMatrix bad(2, 3);
  bad.setZero();
  CHECK_THROWS_AS(reparameterize(model, qfi, slds, bad), DimensionMismatch);
}

TEST_CASE("scalar_qcrb") {
  RMatrix h(2, 2);
  h << 2.0, 0.0, 0.0, 8.0;
  const RMatrix id = RMatrix::Identity(2, 2);

  CHECK(scalar_qcrb(h, id).value == doctest::Approx(0.625).epsilon(1e-13));
  CHECK(scalar_qcrb(h, id, 5).value == doctest::Approx(0.125).epsilon(1e-13));

  RMatrix g = RMatrix::Zero(2, 2);
  g(0, 0) = 1.0;
  CHECK(scalar_qcrb(h, g).value == doctest::Approx(0.5).epsilon(1e-13));

  // a rotated information matrix gives the same scalar under a full weight
  RMatrix u(2, 2);
  const double th = 0.3;
  u << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  const RMatrix hr = u * h * u.transpose();
  CHECK(scalar_qcrb(hr, id).value == doctest::Approx(0.625).epsilon(1e-12));

  CHECK_THROWS_AS(scalar_qcrb(h, id, 0), BadWeight);
  CHECK_THROWS_AS(scalar_qcrb(h, RMatrix::Identity(3, 3)), BadWeight);
  RMatrix asym(2, 2);
  asym << 1.0, 0.5, -0.5, 1.0;
  CHECK_THROWS_AS(scalar_qcrb(h, asym), BadWeight);
  RMatrix indef(2, 2);
  indef << 1.0, 0.0, 0.0, -1.0;
  CHECK_THROWS_AS(scalar_qcrb(h, indef), BadWeight);

  RMatrix singular(2, 2);
  singular << 1.0, 0.0, 0.0, 0.0;
  CHECK_THROWS_AS(scalar_qcrb(singular, id), SingularQfi);
}

TEST_CASE("with_fd_derivatives against an analytic derivative") {
  // rotated two-level state, orthonormal frame
  const auto coeffs = [](const std::vector<double>& th) {
    const double t = th[0];
    RMatrix u(2, 2);
    u << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    RMatrix p = RMatrix::Zero(2, 2);
    p(0, 0) = 0.7;
    p(1, 1) = 0.3;
    return CMatrix((u * p * u.transpose()).cast<Complex>());
  };
  const double t0 = 0.3;
  const ModelMatrices model = with_fd_derivatives(
      coeffs, CMatrix::Identity(2, 2), {t0}, {"angle"});
  CHECK(model.parameter_count() == 1);
  CHECK(model.parameter_names[0] == "angle");
  CHECK((model.r - coeffs({t0})).norm() == 0.0);

  RMatrix u(2, 2), du(2, 2);
  u << std::cos(t0), -std::sin(t0), std::sin(t0), std::cos(t0);
  du << -std::sin(t0), -std::cos(t0), std::cos(t0), -std::sin(t0);
  RMatrix p = RMatrix::Zero(2, 2);
  p(0, 0) = 0.7;
  p(1, 1) = 0.3;
  const RMatrix analytic = du * p * u.transpose() + u * p * du.transpose();
  CHECK((model.d[0] - analytic.cast<Complex>()).norm() < 1e-9);

  model.validate();
  const QfiResult qfi = qfi_gamma(model, solve_slds(model));
  // pure rotation of a diagonal mixture: H = 4 (p0 - p1)^2 / (p0 + p1)
  CHECK(qfi.h(0, 0) == doctest::Approx(4.0 * 0.4 * 0.4).epsilon(1e-6));
}
