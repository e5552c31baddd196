#include "gramqfi/ortho.hpp"

#include <algorithm>
#include <cmath>

#include "gramqfi/linalg.hpp"

namespace gramqfi {

OrthoModel orthonormalize(const ModelMatrices& model, OrthoFrame frame,
                          double cond_cap) {
  model.validate(cond_cap);

  CMatrix t;
  if (frame == OrthoFrame::MetricSqrt) {
    t = psd_sqrt(model.s);
  } else {
    Eigen::LLT<CMatrix> llt(model.s);
    if (llt.info() != Eigen::Success) {
      throw SingularMetric("orthonormalize: Cholesky factorization failed");
    }
    t = llt.matrixL();
  }

  OrthoModel out;
  out.frame = t;
  out.rho = t.adjoint() * model.r * t;
  out.rho = 0.5 * (out.rho + out.rho.adjoint().eval());
  out.drho.reserve(model.d.size());
  for (const CMatrix& d : model.d) {
    CMatrix dr = t.adjoint() * d * t;
    out.drho.push_back(0.5 * (dr + dr.adjoint().eval()));
  }
  out.parameter_names = model.parameter_names;
  return out;
}

EigenQfi eigen_qfi(const OrthoModel& model, double eig_floor,
                   double divergence_tol) {
  require_hermitian(model.rho, "eigen_qfi state", 1e-10);
  if (std::abs(model.rho.trace() - Complex(1.0, 0.0)) > 1e-8) {
    throw ModelInvariantViolation("eigen_qfi: state trace deviates from 1");
  }
  if (!(eig_floor > 0.0)) {
    throw DegenerateFloor("eigen_qfi: eig_floor must be positive");
  }

  EigenPairs ep = herm_eig(model.rho, 1e-10);
  const Index n = ep.eigenvalues.size();
  const double pmax = ep.eigenvalues.maxCoeff();
  if (ep.eigenvalues.minCoeff() < -1e-10 * std::max(1.0, pmax)) {
    throw NotPSD("eigen_qfi: state has a negative eigenvalue");
  }
  const double floor = eig_floor * std::max(1.0, pmax);

  const std::size_t p = model.drho.size();
  EigenQfi out;
  out.slds.resize(p);
  out.dropped_mass.resize(p, 0.0);

  bool any_pair = false;
  std::vector<CMatrix> l_eig(p);
  for (std::size_t mu = 0; mu < p; ++mu) {
    require_hermitian(model.drho[mu], "eigen_qfi derivative", 1e-10);
    const CMatrix e = ep.eigenvectors.adjoint() * model.drho[mu] *
                      ep.eigenvectors;
    CMatrix l = CMatrix::Zero(n, n);
    double kept = 0.0, dropped = 0.0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const double denom = ep.eigenvalues(i) + ep.eigenvalues(j);
        const double w = std::norm(e(i, j));
        if (denom > floor) {
          l(i, j) = 2.0 * e(i, j) / denom;
          kept += w;
          any_pair = true;
        } else {
          dropped += w;
        }
      }
    }
    const double total = kept + dropped;
    out.dropped_mass[mu] = total > 0.0 ? std::sqrt(dropped / total) : 0.0;
    if (out.dropped_mass[mu] > divergence_tol) {
      out.divergence_warning = true;
    }
    l_eig[mu] = l;
    out.slds[mu] = ep.eigenvectors * l * ep.eigenvectors.adjoint();
  }
  if (!any_pair) {
    throw DegenerateFloor("eigen_qfi: every eigenvalue pair is below the "
                          "floor; the state is numerically zero");
  }

  CMatrix t(static_cast<Index>(p), static_cast<Index>(p));
  const RVector& lam = ep.eigenvalues;
  for (std::size_t mu = 0; mu < p; ++mu) {
    for (std::size_t nu = 0; nu < p; ++nu) {
      // Tr[rho L_mu L_nu] evaluated in the eigenbasis.
      const CMatrix prod = l_eig[mu] * l_eig[nu];
      Complex acc = 0.0;
      for (Index i = 0; i < n; ++i) acc += lam(i) * prod(i, i);
      t(static_cast<Index>(mu), static_cast<Index>(nu)) = acc;
    }
  }

  const Index pp = static_cast<Index>(p);
  out.qfi.h = RMatrix(pp, pp);
  out.qfi.gamma = RMatrix(pp, pp);
  for (Index mu = 0; mu < pp; ++mu) {
    for (Index nu = 0; nu < pp; ++nu) {
      const Complex sym = 0.5 * (t(mu, nu) + t(nu, mu));
      const Complex asym = 0.5 * (t(mu, nu) - t(nu, mu));
      out.qfi.h(mu, nu) = sym.real();
      out.qfi.gamma(mu, nu) = asym.imag();
      out.qfi.imaginary_leakage =
          std::max(out.qfi.imaginary_leakage,
                   std::max(std::abs(sym.imag()), std::abs(asym.real())));
    }
  }
  return out;
}

}  // namespace gramqfi
