#include "gramqfi/basis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "gramqfi/linalg.hpp"

namespace gramqfi {

namespace {

CMatrix overlap_matrix(const std::vector<BasisDescriptor>& descs,
                       const OverlapFn& overlap) {
  const Index n = static_cast<Index>(descs.size());
  CMatrix s(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const Complex sij = overlap(descs[i], descs[j]);
      s(i, j) = sij;
      s(j, i) = std::conj(sij);
    }
  }
  return s;
}

void check_labels_unique(const std::vector<BasisDescriptor>& descs) {
  std::unordered_set<std::string> seen;
  for (const auto& d : descs) {
    if (!seen.insert(d.label).second) {
      throw DegenerateBasis("duplicate basis label '" + d.label + "'");
    }
  }
}

}  // namespace

CMatrix gramian(const BasisSet& basis) {
  if (!basis.overlap) {
    throw ModelInvariantViolation("gramian: basis has no overlap callback");
  }
  if (basis.descriptors.empty()) {
    throw EmptyBasis("gramian: basis is empty");
  }
  check_labels_unique(basis.descriptors);

  const Index n = basis.size();
  CMatrix s(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      s(i, j) = basis.overlap(basis.descriptors[i], basis.descriptors[j]);
    }
  }
  require_finite(s, "gramian");
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  if (hermiticity_defect(s) > 1e-12 * scale) {
    throw NotHermitian("gramian: overlap callback is not Hermitian");
  }
  return 0.5 * (s + s.adjoint().eval());
}

BasisSelection build_basis(std::vector<BasisDescriptor> candidates,
                           OverlapFn overlap, double cond_cap) {
  if (!overlap) {
    throw ModelInvariantViolation("build_basis: no overlap callback");
  }
  if (!(cond_cap >= 1.0)) {
    throw ModelInvariantViolation("build_basis: cond_cap must be >= 1");
  }
  check_labels_unique(candidates);

  BasisSelection sel;
  std::vector<BasisDescriptor> kept;
  for (auto& cand : candidates) {
    std::vector<BasisDescriptor> trial = kept;
    trial.push_back(cand);
    CMatrix s = overlap_matrix(trial, overlap);
    bool ok = s.allFinite();
    if (ok) {
      const double cond = hermitian_condition(s);
      ok = std::isfinite(cond) && cond <= cond_cap;
    }
    if (ok) {
      kept = std::move(trial);
    } else {
      sel.discarded.push_back(std::move(cand));
    }
  }
  if (kept.empty()) {
    throw EmptyBasis("build_basis: no candidate yields a positive definite "
                     "Gramian under the condition cap");
  }
  sel.basis.descriptors = std::move(kept);
  sel.basis.overlap = std::move(overlap);
  return sel;
}

}  // namespace gramqfi
