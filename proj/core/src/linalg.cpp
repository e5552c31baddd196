#include "gramqfi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/KroneckerProduct>

namespace gramqfi {

EigenPairs herm_eig(const CMatrix& m, double atol) {
  require_hermitian(m, "herm_eig input", atol);
  // Symmetrize explicitly so round-off in the input cannot bias the solver.
  const CMatrix h = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("herm_eig: eigensolver did not converge");
  }
  return EigenPairs{es.eigenvalues(), es.eigenvectors()};
}

CMatrix psd_sqrt(const CMatrix& m, double atol) {
  EigenPairs ep = herm_eig(m, atol);
  const Index n = ep.eigenvalues.size();
  const double lmax = n ? ep.eigenvalues.maxCoeff() : 0.0;
  const double floor = -atol * std::max(1.0, lmax);
  RVector roots(n);
  for (Index i = 0; i < n; ++i) {
    double lam = ep.eigenvalues(i);
    if (lam < floor) {
      throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(lam) +
                   " below tolerance " + std::to_string(floor));
    }
    roots(i) = std::sqrt(std::max(lam, 0.0));
  }
  return ep.eigenvectors * roots.asDiagonal() * ep.eigenvectors.adjoint();
}

CMatrix pinv(const CMatrix& m, double rank_tol) {
  require_finite(m, "pinv input");
  if (m.size() == 0) {
    throw DimensionMismatch("pinv: empty matrix");
  }
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rank_tol);
  const Index rank = svd.rank();
  const auto& sv = svd.singularValues();
  RVector inv = RVector::Zero(sv.size());
  for (Index i = 0; i < rank; ++i) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

LyapunovSolution lyapunov_lstsq(const CMatrix& a, const CMatrix& b,
                                const CMatrix& c, double rank_tol) {
  require_square(a, "lyapunov_lstsq coefficient a");
  require_square(b, "lyapunov_lstsq coefficient b");
  require_finite(a, "lyapunov_lstsq coefficient a");
  require_finite(b, "lyapunov_lstsq coefficient b");
  require_finite(c, "lyapunov_lstsq right-hand side");
  const Index n = a.rows();
  const Index m = b.rows();
  if (c.rows() != n || c.cols() != m) {
    throw DimensionMismatch("lyapunov_lstsq: right-hand side is " +
                            std::to_string(c.rows()) + "x" +
                            std::to_string(c.cols()) + ", expected " +
                            std::to_string(n) + "x" + std::to_string(m));
  }
  if (n == 0 || m == 0) {
    throw DimensionMismatch("lyapunov_lstsq: empty system");
  }
  if (!(rank_tol > 0.0) || !std::isfinite(rank_tol)) {
    throw ModelInvariantViolation("lyapunov_lstsq: rank_tol must be positive");
  }

  // Column-major vectorization: vec(a x) = (I (x) a) vec(x),
  // vec(x b) = (b^T (x) I) vec(x).
  const CMatrix idn = CMatrix::Identity(n, n);
  const CMatrix idm = CMatrix::Identity(m, m);
  CMatrix k(n * m, n * m);
  k = Eigen::kroneckerProduct(idm, a);
  k += Eigen::kroneckerProduct(b.transpose(), idn);

  Eigen::Map<const CVector> cv(c.data(), n * m);
  Eigen::JacobiSVD<CMatrix> svd(k, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rank_tol);

  CVector xv = svd.solve(cv);
  // One pass of iterative refinement with the same truncated factors. The
  // correction lives in the row space, so minimality of the norm survives.
  xv += svd.solve((cv - k * xv).eval());

  LyapunovSolution sol;
  sol.x = Eigen::Map<const CMatrix>(xv.data(), n, m);
  sol.residual = (a * sol.x + sol.x * b - c).norm();
  sol.rank_deficiency = svd.singularValues().size() - svd.rank();
  if (!sol.x.allFinite()) {
    throw SolverFailure("lyapunov_lstsq: non-finite solution");
  }
  return sol;
}

double hermitian_condition(const CMatrix& m, double atol) {
  EigenPairs ep = herm_eig(m, atol);
  if (ep.eigenvalues.size() == 0) {
    throw DimensionMismatch("hermitian_condition: empty matrix");
  }
  const double lo = ep.eigenvalues(0);
  const double hi = ep.eigenvalues(ep.eigenvalues.size() - 1);
  if (!(lo > 0.0) || !(hi > 0.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return hi / lo;
}

}  // namespace gramqfi
