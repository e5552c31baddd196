#include "gramqfi/model.hpp"

#include <algorithm>
#include <cmath>

#include "gramqfi/linalg.hpp"

namespace gramqfi {

void ModelMatrices::validate(double cond_cap) const {
  const Index n = dim();
  if (n == 0) {
    throw EmptyBasis("model: empty basis");
  }
  require_hermitian(s, "model Gramian S");
  require_hermitian(r, "model state coefficients R");
  if (r.rows() != n || r.cols() != n) {
    throw DimensionMismatch("model: R is " + std::to_string(r.rows()) + "x" +
                            std::to_string(r.cols()) + " but S is " +
                            std::to_string(n) + "x" + std::to_string(n));
  }
  if (!parameter_names.empty() &&
      parameter_names.size() != d.size()) {
    throw DimensionMismatch("model: " + std::to_string(parameter_names.size()) +
                            " parameter names for " + std::to_string(d.size()) +
                            " derivatives");
  }
  for (std::size_t mu = 0; mu < d.size(); ++mu) {
    const std::string tag = "model derivative D[" + std::to_string(mu) + "]";
    require_hermitian(d[mu], tag);
    if (d[mu].rows() != n) {
      throw DimensionMismatch(tag + " has dimension " +
                              std::to_string(d[mu].rows()) + ", expected " +
                              std::to_string(n));
    }
  }

  const double cond = hermitian_condition(s);
  if (!std::isfinite(cond) || cond > cond_cap) {
    throw SingularMetric("model: Gramian condition " + std::to_string(cond) +
                         " exceeds cap " + std::to_string(cond_cap));
  }

  // Positivity of the state itself, checked in an orthonormal frame.
  CMatrix root;
  try {
    root = psd_sqrt(s);
  } catch (const NotPSD&) {
    throw SingularMetric("model: Gramian is not positive semidefinite");
  }
  const CMatrix rho = root * r * root;
  EigenPairs ep = herm_eig(rho);
  const double pmin = ep.eigenvalues.minCoeff();
  const double pscale = std::max(1.0, ep.eigenvalues.cwiseAbs().maxCoeff());
  if (pmin < -1e-10 * pscale) {
    throw NotPSD("model: state has negative eigenvalue " +
                 std::to_string(pmin));
  }

  const double trace_err = std::abs((r * s).trace() - Complex(1.0, 0.0));
  if (trace_err > 1e-10) {
    throw ModelInvariantViolation("model: Tr[R S] deviates from 1 by " +
                                  std::to_string(trace_err));
  }
  for (std::size_t mu = 0; mu < d.size(); ++mu) {
    const double dscale =
        std::max(1.0, d[mu].size() ? d[mu].cwiseAbs().maxCoeff() : 0.0);
    const double dtrace = std::abs((d[mu] * s).trace());
    if (dtrace > 1e-10 * dscale) {
      throw ModelInvariantViolation(
          "model: derivative " + std::to_string(mu) +
          " is not traceless, |Tr[D S]| = " + std::to_string(dtrace));
    }
  }
}

}  // namespace gramqfi
