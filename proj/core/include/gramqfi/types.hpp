#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gramqfi {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Condition number above which a Gramian (or a scalar-bound information
// matrix) is treated as numerically singular.
inline constexpr double kDefaultConditionCap = 1e12;

// Relative singular value / eigenvalue cutoff for rank decisions.
inline constexpr double kDefaultRankTol = 1e-10;

// Absolute floor used when classifying matrices (hermiticity, positivity).
inline constexpr double kDefaultAtol = 1e-12;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define GRAMQFI_DEFINE_ERROR(Name)                       \
  class Name : public Error {                            \
   public:                                               \
    explicit Name(const std::string& msg) : Error(msg) {} \
  }

GRAMQFI_DEFINE_ERROR(DimensionMismatch);
GRAMQFI_DEFINE_ERROR(NotHermitian);
GRAMQFI_DEFINE_ERROR(NotPSD);
GRAMQFI_DEFINE_ERROR(ConvergenceFailure);
GRAMQFI_DEFINE_ERROR(SingularMetric);
GRAMQFI_DEFINE_ERROR(EmptyBasis);
GRAMQFI_DEFINE_ERROR(DegenerateBasis);
GRAMQFI_DEFINE_ERROR(ModelInvariantViolation);
GRAMQFI_DEFINE_ERROR(SolverFailure);
GRAMQFI_DEFINE_ERROR(SingularQfi);
GRAMQFI_DEFINE_ERROR(BadWeight);
GRAMQFI_DEFINE_ERROR(IndexOutOfRange);
GRAMQFI_DEFINE_ERROR(UnsupportedDerivativeOrder);
GRAMQFI_DEFINE_ERROR(RankChange);
GRAMQFI_DEFINE_ERROR(DegenerateFloor);

#undef GRAMQFI_DEFINE_ERROR

// Largest absolute entry of M minus its adjoint; zero for Hermitian input.
double hermiticity_defect(const CMatrix& m);

bool is_finite(const CMatrix& m);
bool is_finite(const RMatrix& m);

// Throws ModelInvariantViolation naming `what` if m contains NaN or Inf.
void require_finite(const CMatrix& m, const std::string& what);
void require_finite(const RMatrix& m, const std::string& what);

void require_square(const CMatrix& m, const std::string& what);

// Throws NotHermitian if the defect exceeds atol * max(1, maxabs(m)).
void require_hermitian(const CMatrix& m, const std::string& what,
                       double atol = kDefaultAtol);

}  // namespace gramqfi
