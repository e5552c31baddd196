#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gramqfi/types.hpp"

namespace gramqfi {

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;   // worst error the check measured
  double tolerance = 0.0;  // tolerance it was held against
  double seconds = 0.0;
  std::string detail;      // failure location or warning text
};

struct CheckSpec {
  std::string name;
  std::string summary;
  double default_tolerance;
  std::function<CheckResult(double tolerance)> run;
};

// The built-in consistency suite: closed forms against the solver on
// parameter grids, the eigendecomposition oracle against the coefficient
// engine on deterministic randomized models, gauge and basis invariances,
// finite-difference cross checks, asymptotic limits and curve shapes.
const std::vector<CheckSpec>& validation_checks();

// Runs every check whose name contains `only` (all of them when empty),
// overriding each check's tolerance with `tolerance` when given. Throws
// IndexOutOfRange when `only` matches nothing.
std::vector<CheckResult> run_validation(
    const std::optional<std::string>& only = std::nullopt,
    const std::optional<double>& tolerance = std::nullopt);

}  // namespace gramqfi
