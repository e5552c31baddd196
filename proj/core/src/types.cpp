#include "gramqfi/types.hpp"

#include <algorithm>
#include <cmath>

namespace gramqfi {

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermiticity_defect: matrix is not square (" +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ")");
  }
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_finite(const CMatrix& m) {
  return m.allFinite();
}

bool is_finite(const RMatrix& m) {
  return m.allFinite();
}

void require_finite(const CMatrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw ModelInvariantViolation(what + " contains a non-finite entry");
  }
}

void require_finite(const RMatrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw ModelInvariantViolation(what + " contains a non-finite entry");
  }
}

void require_square(const CMatrix& m, const std::string& what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(what + " must be square, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
}

void require_hermitian(const CMatrix& m, const std::string& what, double atol) {
  require_square(m, what);
  require_finite(m, what);
  const double scale = std::max(1.0, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  const double defect = hermiticity_defect(m);
  if (defect > atol * scale) {
    throw NotHermitian(what + " is not Hermitian (defect " +
                       std::to_string(defect) + ")");
  }
}

}  // namespace gramqfi
