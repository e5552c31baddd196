#include "gramqfi/engine.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gramqfi/linalg.hpp"

namespace gramqfi {

namespace {

void check_sld_shapes(const ModelMatrices& model, const SldSolution& slds) {
  if (static_cast<Index>(slds.l.size()) != model.parameter_count()) {
    throw DimensionMismatch("qfi_gamma: " + std::to_string(slds.l.size()) +
                            " SLDs for " +
                            std::to_string(model.parameter_count()) +
                            " parameters");
  }
  for (const CMatrix& l : slds.l) {
    if (l.rows() != model.dim() || l.cols() != model.dim()) {
      throw DimensionMismatch("qfi_gamma: SLD dimension does not match model");
    }
    require_hermitian(l, "SLD coefficient matrix", 1e-9);
  }
}

}  // namespace

SldSolution solve_slds(const ModelMatrices& model, double rank_tol) {
  model.validate();
  const CMatrix rs = model.r * model.s;
  const CMatrix sr = model.s * model.r;

  SldSolution out;
  out.l.reserve(model.d.size());
  for (std::size_t mu = 0; mu < model.d.size(); ++mu) {
    const CMatrix rhs = 2.0 * model.d[mu];
    LyapunovSolution sol = lyapunov_lstsq(rs, sr, rhs, rank_tol);
    // The minimum-norm solution of this system is Hermitian up to round-off;
    // fold the round-off away and report the residual of what is returned.
    CMatrix l = 0.5 * (sol.x + sol.x.adjoint().eval());
    const double residual = (rs * l + l * sr - rhs).norm();
    const double tol = 1e-8 * std::max(1.0, rhs.norm());
    if (!(residual <= tol)) {
      throw SolverFailure(
          "solve_slds: parameter " +
          (mu < model.parameter_names.size() ? model.parameter_names[mu]
                                             : std::to_string(mu)) +
          " has Lyapunov residual " + std::to_string(residual) +
          " above tolerance " + std::to_string(tol) +
          "; the derivative leaves the state support");
    }
    out.l.push_back(std::move(l));
    out.residuals.push_back(residual);
    out.rank_deficiencies.push_back(sol.rank_deficiency);
  }
  return out;
}

QfiResult qfi_gamma(const ModelMatrices& model, const SldSolution& slds) {
  check_sld_shapes(model, slds);
  const Index p = model.parameter_count();
  const CMatrix rs = model.r * model.s;

  std::vector<CMatrix> tilde(slds.l.size());
  for (Index nu = 0; nu < p; ++nu) {
    tilde[nu] = model.s * slds.l[nu] * model.s;
  }

  CMatrix t(p, p);
  for (Index mu = 0; mu < p; ++mu) {
    for (Index nu = 0; nu < p; ++nu) {
      t(mu, nu) = (rs * slds.l[mu] * tilde[nu]).trace();
    }
  }

  QfiResult res;
  res.h = RMatrix(p, p);
  res.gamma = RMatrix(p, p);
  res.imaginary_leakage = 0.0;
  for (Index mu = 0; mu < p; ++mu) {
    for (Index nu = 0; nu < p; ++nu) {
      const Complex sym = 0.5 * (t(mu, nu) + t(nu, mu));
      const Complex asym = 0.5 * (t(mu, nu) - t(nu, mu));
      res.h(mu, nu) = sym.real();
      res.gamma(mu, nu) = asym.imag();
      res.imaginary_leakage = std::max(
          res.imaginary_leakage, std::max(std::abs(sym.imag()),
                                          std::abs(asym.real())));
    }
  }
  return res;
}

Complex state_expectation(const ModelMatrices& model, const CMatrix& x) {
  if (x.rows() != model.dim() || x.cols() != model.dim()) {
    throw DimensionMismatch("state_expectation: operator dimension " +
                            std::to_string(x.rows()) + " does not match model");
  }
  return (model.r * model.s * x * model.s).trace();
}

Complex commutator_expectation(const ModelMatrices& model, const CMatrix& x,
                               const CMatrix& y) {
  const CMatrix comm = x * model.s * y - y * model.s * x;
  return state_expectation(model, comm);
}

CMatrix embed_zero_padded(const CMatrix& small,
                          const std::vector<Index>& index_map,
                          Index full_dim) {
  require_square(small, "embed_zero_padded input");
  if (static_cast<Index>(index_map.size()) != small.rows()) {
    throw DimensionMismatch("embed_zero_padded: index map has " +
                            std::to_string(index_map.size()) +
                            " entries for a " + std::to_string(small.rows()) +
                            "-dimensional matrix");
  }
  std::vector<bool> used(static_cast<std::size_t>(std::max<Index>(full_dim, 0)),
                         false);
  for (Index idx : index_map) {
    if (idx < 0 || idx >= full_dim) {
      throw IndexOutOfRange("embed_zero_padded: index " + std::to_string(idx) +
                            " outside [0, " + std::to_string(full_dim) + ")");
    }
    if (used[static_cast<std::size_t>(idx)]) {
      throw ModelInvariantViolation("embed_zero_padded: duplicate index " +
                                    std::to_string(idx));
    }
    used[static_cast<std::size_t>(idx)] = true;
  }
  CMatrix out = CMatrix::Zero(full_dim, full_dim);
  for (Index i = 0; i < small.rows(); ++i) {
    for (Index j = 0; j < small.cols(); ++j) {
      out(index_map[i], index_map[j]) = small(i, j);
    }
  }
  return out;
}

CMatrix to_tilde(const CMatrix& a, const CMatrix& s) {
  if (a.rows() != s.rows() || a.cols() != s.cols()) {
    throw DimensionMismatch("to_tilde: dimensions disagree");
  }
  return s * a * s;
}

CMatrix from_tilde(const CMatrix& a_tilde, const CMatrix& s, double cond_cap) {
  if (a_tilde.rows() != s.rows() || a_tilde.cols() != s.cols()) {
    throw DimensionMismatch("from_tilde: dimensions disagree");
  }
  const double cond = hermitian_condition(s);
  if (!std::isfinite(cond) || cond > cond_cap) {
    throw SingularMetric("from_tilde: Gramian condition " +
                         std::to_string(cond) + " exceeds cap");
  }
  Eigen::LLT<CMatrix> llt(s);
  if (llt.info() != Eigen::Success) {
    throw SingularMetric("from_tilde: Gramian is not positive definite");
  }
  const CMatrix left = llt.solve(a_tilde);             // S^-1 A~
  return llt.solve(left.adjoint()).adjoint();          // S^-1 A~ S^-1
}

Reparameterized reparameterize(const ModelMatrices& model,
                               const QfiResult& qfi, const SldSolution& slds,
                               const RMatrix& jacobian,
                               std::vector<std::string> new_names) {
  const Index p = model.parameter_count();
  if (jacobian.cols() != p) {
    throw DimensionMismatch("reparameterize: jacobian has " +
                            std::to_string(jacobian.cols()) +
                            " columns for " + std::to_string(p) +
                            " old parameters");
  }
  if (jacobian.rows() < 1) {
    throw DimensionMismatch("reparameterize: jacobian has no rows");
  }
  require_finite(jacobian, "reparameterize jacobian");
  if (qfi.h.rows() != p || qfi.h.cols() != p) {
    throw DimensionMismatch("reparameterize: information matrix size does "
                            "not match the model");
  }
  check_sld_shapes(model, slds);
  const Index q = jacobian.rows();
  if (!new_names.empty() && static_cast<Index>(new_names.size()) != q) {
    throw DimensionMismatch("reparameterize: wrong number of new names");
  }

  Reparameterized out;
  out.model.r = model.r;
  out.model.s = model.s;
  out.model.d.resize(q);
  out.slds.l.resize(q);
  for (Index m = 0; m < q; ++m) {
    CMatrix dm = CMatrix::Zero(model.dim(), model.dim());
    CMatrix lm = CMatrix::Zero(model.dim(), model.dim());
    for (Index n = 0; n < p; ++n) {
      dm += jacobian(m, n) * model.d[n];
      lm += jacobian(m, n) * slds.l[n];
    }
    out.model.d[m] = std::move(dm);
    out.slds.l[m] = std::move(lm);
  }
  if (!new_names.empty()) {
    out.model.parameter_names = std::move(new_names);
  } else {
    for (Index m = 0; m < q; ++m) {
      out.model.parameter_names.push_back("theta" + std::to_string(m));
    }
  }

  // Same vectorized system, so the gauge dimension carries over unchanged.
  const CMatrix rs = model.r * model.s;
  const CMatrix sr = model.s * model.r;
  for (Index m = 0; m < q; ++m) {
    const CMatrix& lm = out.slds.l[m];
    out.slds.residuals.push_back(
        (rs * lm + lm * sr - 2.0 * out.model.d[m]).norm());
    out.slds.rank_deficiencies.push_back(
        slds.rank_deficiencies.empty() ? 0 : slds.rank_deficiencies.front());
  }

  QfiResult recomputed = qfi_gamma(out.model, out.slds);
  out.qfi.h = jacobian * qfi.h * jacobian.transpose();
  out.qfi.gamma = recomputed.gamma;
  out.qfi.imaginary_leakage = recomputed.imaginary_leakage;
  return out;
}

WeightedBound scalar_qcrb(const RMatrix& h, const RMatrix& weight, long copies,
                          double cond_cap) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw DimensionMismatch("scalar_qcrb: information matrix must be square");
  }
  require_finite(h, "scalar_qcrb information matrix");
  if (copies < 1) {
    throw BadWeight("scalar_qcrb: copies must be >= 1, got " +
                    std::to_string(copies));
  }
  if (weight.rows() != h.rows() || weight.cols() != h.cols()) {
    throw BadWeight("scalar_qcrb: weight is " + std::to_string(weight.rows()) +
                    "x" + std::to_string(weight.cols()) + ", expected " +
                    std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
  }
  require_finite(weight, "scalar_qcrb weight");
  const double wscale =
      std::max(1.0, weight.size() ? weight.cwiseAbs().maxCoeff() : 0.0);
  if ((weight - weight.transpose()).cwiseAbs().maxCoeff() > 1e-10 * wscale) {
    throw BadWeight("scalar_qcrb: weight matrix is not symmetric");
  }
  {
    Eigen::SelfAdjointEigenSolver<RMatrix> wes(
        0.5 * (weight + weight.transpose()));
    if (wes.info() != Eigen::Success) {
      throw ConvergenceFailure("scalar_qcrb: weight eigensolve failed");
    }
    if (wes.eigenvalues().minCoeff() < -1e-12 * wscale) {
      throw BadWeight("scalar_qcrb: weight matrix is not positive "
                      "semidefinite");
    }
  }

  Eigen::SelfAdjointEigenSolver<RMatrix> hes(0.5 * (h + h.transpose()));
  if (hes.info() != Eigen::Success) {
    throw ConvergenceFailure("scalar_qcrb: eigensolve failed");
  }
  const RVector lam = hes.eigenvalues();
  const double lmin = lam.minCoeff();
  const double lmax = lam.maxCoeff();
  if (!(lmin > 0.0) || lmax / lmin > cond_cap) {
    throw SingularQfi("scalar_qcrb: information matrix is singular at the "
                      "condition cap (eigenvalues in [" +
                      std::to_string(lmin) + ", " + std::to_string(lmax) +
                      "])");
  }

  const RMatrix g_in_eigbasis =
      hes.eigenvectors().transpose() * weight * hes.eigenvectors();
  double value = 0.0;
  for (Index i = 0; i < lam.size(); ++i) {
    value += g_in_eigbasis(i, i) / lam(i);
  }
  WeightedBound out;
  out.weight = weight;
  out.copies = copies;
  out.value = value / static_cast<double>(copies);
  return out;
}

ModelMatrices with_fd_derivatives(
    const std::function<CMatrix(const std::vector<double>&)>& coefficients,
    const CMatrix& s, const std::vector<double>& at,
    std::vector<std::string> names, double step_scale) {
  if (!coefficients) {
    throw ModelInvariantViolation("with_fd_derivatives: no coefficient "
                                  "callback");
  }
  if (!(step_scale > 0.0) || !std::isfinite(step_scale)) {
    throw ModelInvariantViolation("with_fd_derivatives: step_scale must be "
                                  "positive");
  }
  ModelMatrices model;
  model.s = s;
  model.r = coefficients(at);
  model.parameter_names = std::move(names);
  for (std::size_t mu = 0; mu < at.size(); ++mu) {
    const double step = step_scale * std::max(1.0, std::abs(at[mu]));
    std::vector<double> lo = at, hi = at;
    lo[mu] -= step;
    hi[mu] += step;
    CMatrix diff = (coefficients(hi) - coefficients(lo)) / (2.0 * step);
    model.d.push_back(0.5 * (diff + diff.adjoint().eval()));
  }
  return model;
}

}  // namespace gramqfi
