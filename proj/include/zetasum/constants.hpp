#pragma once

// Laurent coefficients at s = 1:
//   ζ(s)     =  1/(s-1) + Σ C_j (s-1)^j
//   ζ'/ζ(s)  = -1/(s-1) + Σ A_j (s-1)^j
// C_j = (-1)^j γ_j / j! in terms of the Stieltjes constants γ_j.

#include <vector>

#include "zetasum/real.hpp"

namespace zetasum {

struct LaurentTable {
  std::vector<Real> C;
  std::vector<Real> A;
  int j_max = 0;
  int digits = 0;
};

/// C_0..C_jmax by trapezoidal Cauchy integration of ζ(s) - 1/(s-1) on
/// |s-1| = radius.
std::vector<Real> stieltjes_C(int j_max, const PrecisionContext& ctx, double radius = 0.5);

/// A_0 = C_0, A_j = (j+1) C_j - Σ_{k<j} A_k C_{j-1-k}.
std::vector<Real> israilov_A(const std::vector<Real>& C, int j_max);

/// A_0..A_jmax straight from ζ'/ζ(s) + 1/(s-1) on |s-1| = radius.
std::vector<Real> a_oracle(int j_max, const PrecisionContext& ctx, double radius = 0.5);

/// Cached per (j_max, digits, guard_digits); A comes from israilov_A(C).
const LaurentTable& laurent_table(int j_max, const PrecisionContext& ctx);

}  // namespace zetasum
