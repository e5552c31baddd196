#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gramqfi/types.hpp"

namespace gramqfi {

// One member of a (generally non-orthogonal) spanning family. The label is
// an opaque tag; it only has to be unique within a basis. Derivative members
// record which parameter they differentiate and to what order.
struct BasisDescriptor {
  std::string label;
  int derivative_order = 0;
  std::optional<int> derivative_parameter;
};

// Callback producing the inner product between the states behind two
// descriptors. Implementations are expected to be Hermitian:
// overlap(a, b) == conj(overlap(b, a)).
using OverlapFn =
    std::function<Complex(const BasisDescriptor&, const BasisDescriptor&)>;

struct BasisSet {
  std::vector<BasisDescriptor> descriptors;
  OverlapFn overlap;

  Index size() const { return static_cast<Index>(descriptors.size()); }
};

// Gramian of the basis, checked Hermitian to 1e-12 (relative) and finite.
CMatrix gramian(const BasisSet& basis);

struct BasisSelection {
  BasisSet basis;
  std::vector<BasisDescriptor> discarded;
};

// Greedy prefix selection: candidates are admitted in order as long as the
// Gramian of the kept set stays positive definite with condition number at
// most cond_cap. Rejected members are reported, not silently dropped.
// Throws EmptyBasis when nothing survives and DegenerateBasis on duplicate
// labels.
BasisSelection build_basis(std::vector<BasisDescriptor> candidates,
                           OverlapFn overlap,
                           double cond_cap = kDefaultConditionCap);

}  // namespace gramqfi
