#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gramqfi/model.hpp"

namespace gramqfi {

// Solves, for each parameter, the symmetric logarithmic derivative equation
//   rho L + L rho = 2 d rho
// in coefficient form: (R S) L + L (S R) = 2 D. The solve is minimum-norm
// least-squares, the result is Hermitized, and the residual is evaluated
// after Hermitization. A residual above 1e-8 * max(1, ||2 D||) raises
// SolverFailure; rank deficiencies of the vectorized system are reported so
// callers can tell when a gauge freedom was fixed by the minimum-norm rule.
SldSolution solve_slds(const ModelMatrices& model,
                       double rank_tol = kDefaultRankTol);

// Information matrix and mean commutators from the SLDs:
//   T_mn = Tr[R S L^m S L^n S],
//   H    = sym(Re T),  Gamma = antisym(Im T).
// The parts of T that a Hermitian pair cannot produce are reported as
// imaginary_leakage instead of being folded into the result.
QfiResult qfi_gamma(const ModelMatrices& model, const SldSolution& slds);

// Expectation value Tr[rho X] for an operator with coefficient matrix x,
// contracted through the Gramian: Tr[R S x S].
Complex state_expectation(const ModelMatrices& model, const CMatrix& x);

// Tr[rho [x, y]] in coefficient form.
Complex commutator_expectation(const ModelMatrices& model, const CMatrix& x,
                               const CMatrix& y);

// Places a small coefficient matrix inside a larger basis: entry (i, j) of
// `small` lands at (index_map[i], index_map[j]), everything else is zero.
CMatrix embed_zero_padded(const CMatrix& small,
                          const std::vector<Index>& index_map, Index full_dim);

// Index-lowered (tilde) picture: A~ = S A S and its inverse. from_tilde
// refuses Gramians whose condition number exceeds cond_cap.
CMatrix to_tilde(const CMatrix& a, const CMatrix& s);
CMatrix from_tilde(const CMatrix& a_tilde, const CMatrix& s,
                   double cond_cap = kDefaultConditionCap);

struct Reparameterized {
  ModelMatrices model;
  SldSolution slds;
  QfiResult qfi;
};

// Smooth change of coordinates with jacobian B, B_mn = d old_n / d new_m.
// Derivatives and SLDs transform linearly (D~ = B D, L~ = B L); the
// information matrix transforms congruently, H~ = B H B^T. Gamma and the
// residuals are recomputed from the transformed SLDs rather than mapped.
Reparameterized reparameterize(const ModelMatrices& model,
                               const QfiResult& qfi, const SldSolution& slds,
                               const RMatrix& jacobian,
                               std::vector<std::string> new_names = {});

// Scalar Cramer-Rao bound Tr[G H^{-1}] / copies for a symmetric PSD weight
// G. Throws BadWeight for an invalid weight or copy count and SingularQfi
// when H is not invertible at the condition cap.
WeightedBound scalar_qcrb(const RMatrix& h, const RMatrix& weight,
                          long copies = 1,
                          double cond_cap = kDefaultConditionCap);

// Builds a model whose derivatives come from central differences of the
// state coefficients in a fixed basis, for families without analytic D.
// The step for parameter m is step_scale * max(1, |at[m]|).
ModelMatrices with_fd_derivatives(
    const std::function<CMatrix(const std::vector<double>&)>& coefficients,
    const CMatrix& s, const std::vector<double>& at,
    std::vector<std::string> names, double step_scale = 1e-6);

}  // namespace gramqfi
