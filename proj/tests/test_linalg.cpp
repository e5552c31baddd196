#include <cmath>
#include <complex>

#include <doctest.h>

#include "gramqfi/linalg.hpp"

using namespace gramqfi;

namespace {

const Complex kI(0.0, 1.0);

CMatrix random_hermitian(int n, unsigned seed) {
  std::srand(seed);
  CMatrix m = CMatrix::Random(n, n);
  return ((m + m.adjoint()) / 2.0).eval();
}

}  // namespace

TEST_CASE("herm_eig identity") {
  const EigenPairs ep = herm_eig(CMatrix::Identity(2, 2));
  CHECK(ep.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ep.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((ep.eigenvectors.adjoint() * ep.eigenvectors -
         CMatrix::Identity(2, 2)).norm() < 1e-13);
}

TEST_CASE("herm_eig two-branch Gramian") {
  const double s = std::exp(-2.0);
  CMatrix g(2, 2);
  g << 1.0, s, s, 1.0;
  const EigenPairs ep = herm_eig(g);
  CHECK(ep.eigenvalues(0) == doctest::Approx(1.0 - s).epsilon(1e-14));
  CHECK(ep.eigenvalues(1) == doctest::Approx(1.0 + s).epsilon(1e-14));
}

TEST_CASE("herm_eig eigenvalue sum matches trace") {
  const CMatrix m = random_hermitian(6, 7u);
  const EigenPairs ep = herm_eig(m);
  const double tr = m.trace().real();
  CHECK(std::abs(ep.eigenvalues.sum() - tr) <=
        1e-12 * std::max(1.0, m.norm()));
  // ascending order
  for (Index i = 1; i < ep.eigenvalues.size(); ++i) {
    CHECK(ep.eigenvalues(i) >= ep.eigenvalues(i - 1));
  }
}

TEST_CASE("psd_sqrt squares back and commutes") {
  CMatrix m = random_hermitian(5, 11u);
  m = (m * m.adjoint()).eval();  // PSD by construction
  const CMatrix root = psd_sqrt(m);
  CHECK((root * root - m).norm() <= 1e-10 * std::max(1.0, m.norm()));
  CHECK((root * m - m * root).norm() <= 1e-10 * std::max(1.0, m.norm()));
  CHECK(hermiticity_defect(root) <= 1e-12);
}

TEST_CASE("psd_sqrt rejects indefinite input") {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  CHECK_THROWS_AS(psd_sqrt(m), NotPSD);
}

TEST_CASE("pinv inverts invertible and satisfies Penrose identities") {
  const CMatrix m = random_hermitian(4, 3u) + 5.0 * CMatrix::Identity(4, 4);
  CHECK((pinv(m) - m.inverse()).norm() < 1e-10);

  // rank-1 projector: pinv equals the projector itself
  CVector v(3);
  v << 1.0, kI, -1.0;
  v /= v.norm();
  const CMatrix p = v * v.adjoint();
  const CMatrix pp = pinv(p);
  CHECK((p * pp * p - p).norm() < 1e-12);
  CHECK((pp * p * pp - pp).norm() < 1e-12);
  CHECK((pp - p).norm() < 1e-12);
}

TEST_CASE("lyapunov_lstsq diagonal system") {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  CMatrix b = CMatrix::Zero(2, 2);
  b(0, 0) = 3.0;
  b(1, 1) = 4.0;
  CMatrix c(2, 2);
  c << 1.0, 2.0, 3.0, 4.0;
  const LyapunovSolution sol = lyapunov_lstsq(a, b, c);
  CHECK(sol.rank_deficiency == 0);
  CHECK(sol.residual < 1e-13);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double expect = c(i, j).real() / (a(i, i).real() + b(j, j).real());
      CHECK(sol.x(i, j).real() == doctest::Approx(expect).epsilon(1e-13));
      CHECK(std::abs(sol.x(i, j).imag()) < 1e-14);
    }
  }
}

TEST_CASE("lyapunov_lstsq minimum-norm solution of a singular system") {
  // a = b = diag(1, 0): the (1,1) entry of x is unconstrained and must come
  // out zero under the minimum-norm rule.
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  CMatrix c(2, 2);
  c << 2.0, 1.0, 1.0, 0.0;
  const LyapunovSolution sol = lyapunov_lstsq(a, a, c);
  CHECK(sol.rank_deficiency == 1);
  CHECK(sol.residual < 1e-13);
  CHECK(sol.x(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sol.x(0, 1).real() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sol.x(1, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(sol.x(1, 1)) < 1e-13);
}

TEST_CASE("lyapunov_lstsq is Hermitian for a Hermitian anticommutator") {
  // rho L + L rho = 2 D with rho PSD and D Hermitian is the equation the
  // engine feeds in; the minimum-norm answer must be Hermitian without help.
  CMatrix rho = random_hermitian(4, 17u);
  rho = (rho * rho.adjoint()).eval();
  rho /= rho.trace().real();
  const CMatrix d = random_hermitian(4, 29u);
  const LyapunovSolution sol = lyapunov_lstsq(rho, rho, 2.0 * d);
  CHECK(hermiticity_defect(sol.x) <= 1e-9 * std::max(1.0, sol.x.norm()));
  CHECK(sol.residual <= 1e-9 * std::max(1.0, 2.0 * d.norm()));
}

TEST_CASE("lyapunov_lstsq least-squares residual on an inconsistent system") {
  // a = b = diag(1, 0) and c with weight on the dead (1,1) coordinate: the
  // normal equations drop that component, the residual reports it.
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  CMatrix c = CMatrix::Zero(2, 2);
  c(1, 1) = 3.0;
  const LyapunovSolution sol = lyapunov_lstsq(a, a, c);
  CHECK(sol.rank_deficiency == 1);
  CHECK(sol.residual == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sol.x.norm() < 1e-12);
}

TEST_CASE("hermitian_condition") {
  CHECK(hermitian_condition(CMatrix::Identity(3, 3)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-4;
  CHECK(hermitian_condition(m) == doctest::Approx(1e4).epsilon(1e-10));
  m(1, 1) = 0.0;
  CHECK(std::isinf(hermitian_condition(m)));
}
