#pragma once

// Identity suite behind `zetasum selfcheck`: relations that must hold to
// round-off whatever the zeros do.

#include <string>
#include <vector>

#include "zetasum/real.hpp"

namespace zetasum {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0;  // largest discrepancy seen
  double limit = 0;
};

std::vector<CheckResult> run_identity_suite(const PrecisionContext& ctx);

}  // namespace zetasum
