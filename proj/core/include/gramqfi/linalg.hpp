#pragma once

#include "gramqfi/types.hpp"

namespace gramqfi {

// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
struct EigenPairs {
  RVector eigenvalues;
  CMatrix eigenvectors;  // columns are orthonormal eigenvectors
};

EigenPairs herm_eig(const CMatrix& m, double atol = kDefaultAtol);

// Hermitian PSD square root via the spectral decomposition. Small negative
// eigenvalues within -atol * max(1, |lambda|_max) are clamped to zero;
// anything below that throws NotPSD.
CMatrix psd_sqrt(const CMatrix& m, double atol = kDefaultAtol);

// Moore-Penrose pseudoinverse with relative singular value cutoff.
CMatrix pinv(const CMatrix& m, double rank_tol = kDefaultRankTol);

struct LyapunovSolution {
  CMatrix x;
  double residual;         // Frobenius norm of A x + x B - C at the solution
  Index rank_deficiency;   // singular values below rank_tol * largest
};

// Minimum-norm least-squares solution of the Sylvester equation
//   A x + x B = C
// obtained by vectorizing to (I (x) A + B^T (x) I) vec(x) = vec(C) and
// applying a truncated SVD. One refinement pass with the same factors
// polishes rounding error; the solution stays in the row space, so the
// minimum-norm property is preserved.
LyapunovSolution lyapunov_lstsq(const CMatrix& a, const CMatrix& b,
                                const CMatrix& c,
                                double rank_tol = kDefaultRankTol);

// Condition number lambda_max / lambda_min of a Hermitian positive definite
// matrix; +inf when the smallest eigenvalue is not positive.
double hermitian_condition(const CMatrix& m, double atol = kDefaultAtol);

}  // namespace gramqfi
