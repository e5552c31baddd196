#pragma once

#include <string>
#include <vector>

#include "gramqfi/model.hpp"

namespace gramqfi {

// Which factor T with T T^dag = S maps the model into an orthonormal frame.
enum class OrthoFrame { MetricSqrt, Cholesky };

// The same statistical model expressed in an orthonormal basis:
// rho = T^dag R T and drho = T^dag D T. Observable quantities do not depend
// on the factor choice.
struct OrthoModel {
  CMatrix rho;
  std::vector<CMatrix> drho;
  CMatrix frame;
  std::vector<std::string> parameter_names;
};

OrthoModel orthonormalize(const ModelMatrices& model,
                          OrthoFrame frame = OrthoFrame::MetricSqrt,
                          double cond_cap = kDefaultConditionCap);

struct EigenQfi {
  QfiResult qfi;
  std::vector<CMatrix> slds;  // SLDs in the orthonormal frame
  // Per parameter, the relative Frobenius weight of the derivative on
  // eigenvalue pairs that sat below the floor and had to be dropped.
  std::vector<double> dropped_mass;
  bool divergence_warning = false;
};

// Textbook eigendecomposition route, used here as an independent check on
// the coefficient-matrix engine: with rho = sum_i p_i |i><i|,
//   L_ij = 2 <i|drho|j> / (p_i + p_j)   where p_i + p_j > floor,
//   H + i Gamma = Tr[rho L_m L_n].
// Pairs at or below eig_floor * max(1, p_max) are dropped; when the dropped
// part carries more than divergence_tol of a derivative's weight the result
// is flagged as divergent (the information diverges or the rank changed).
// Throws DegenerateFloor when every pair is below the floor.
EigenQfi eigen_qfi(const OrthoModel& model, double eig_floor = 1e-12,
                   double divergence_tol = 1e-6);

}  // namespace gramqfi
