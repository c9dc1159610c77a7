#pragma once

// Left-hand sides Σ_{0<γ<=T} ζ^(n)(ρ) X^ρ over a zero table, and the
// residual study against the expansions.
//
// Every ρ is taken as 1/2 + iγ (all zeros at these heights are on the line).

#include <string>
#include <string_view>
#include <vector>

#include "zetasum/arith.hpp"
#include "zetasum/expansions.hpp"
#include "zetasum/zeros.hpp"

namespace zetasum {

/// Σ_{0<γ<=T} ζ^(n)(1/2+iγ) X^{1/2+iγ}. Summed in fixed blocks of ascending
/// γ with a fixed pairwise reduction, so the result does not depend on
/// `threads`.
CValue lhs_zero_sum(int n, const RationalX& X, const Real& T, const ZeroTable& table, const PrecisionContext& ctx,
                    int threads = 1);

/// Σ_{0<γ<=T} X^{1/2+iγ}
CValue landau_lhs(const RationalX& X, const Real& T, const ZeroTable& table, const PrecisionContext& ctx);

struct ComparisonReport {
  CValue lhs;
  CValue rhs;
  CValue residual;
  Real error_scale;
  Real normalized_residual;  // |residual| / error_scale
  struct Meta {
    int n = 0;
    std::string X;
    Real T_requested;
    Real T_effective;
    std::size_t zero_count = 0;
    std::string formula;
    int digits = 0;
  } meta;
};

struct Comparison {
  std::vector<ComparisonReport> reports;
  Real c_hat;         // max normalized residual over the grid
  Real growth;        // last / first normalized residual
  bool nonincreasing = true;  // normalized residual never went up along the grid
};

/// One report per T (each moved off nearby ordinates by
/// safe_truncation_height). Needs table.verified_height >= max(T_grid) + 1.
Comparison compare(int n, const RationalX& X, const std::vector<Real>& T_grid, std::string_view formula,
                   const ZeroTable& table, const PrecisionContext& ctx, int threads = 1,
                   ErrorShape shape = ErrorShape::rh);

}  // namespace zetasum
