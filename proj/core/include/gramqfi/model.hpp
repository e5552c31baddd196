#pragma once

#include <string>
#include <vector>

#include "gramqfi/types.hpp"

namespace gramqfi {

// Coefficient-matrix description of a finite-rank statistical model over a
// non-orthogonal spanning family. R holds the state coefficients, S is the
// Gramian of the family, and D holds one coefficient derivative per
// parameter. All operator algebra contracts through S: the operator with
// coefficients A composed with the one with coefficients B has coefficients
// A S B, and Tr[rho X] = Tr[R S X S] for an operator with coefficients X.
struct ModelMatrices {
  CMatrix r;
  CMatrix s;
  std::vector<CMatrix> d;
  std::vector<std::string> parameter_names;

  Index dim() const { return s.rows(); }
  Index parameter_count() const { return static_cast<Index>(d.size()); }

  // Structural and physical invariants: shapes agree, everything finite,
  // R and S and each D Hermitian, S positive definite under cond_cap,
  // the state has unit trace, rho = S^(1/2) R S^(1/2) is PSD, and each
  // derivative is traceless (Tr[D S] = 0).
  void validate(double cond_cap = kDefaultConditionCap) const;
};

struct SldSolution {
  std::vector<CMatrix> l;             // one coefficient matrix per parameter
  std::vector<double> residuals;      // Lyapunov residuals, Frobenius norm
  std::vector<Index> rank_deficiencies;
};

struct QfiResult {
  RMatrix h;       // quantum Fisher information matrix
  RMatrix gamma;   // mean SLD commutators / (2i)
  // Largest entry that had to be discarded when splitting the raw traces
  // into the symmetric real and antisymmetric imaginary parts.
  double imaginary_leakage = 0.0;
};

struct WeightedBound {
  RMatrix weight;
  long copies = 1;
  double value = 0.0;
};

}  // namespace gramqfi
