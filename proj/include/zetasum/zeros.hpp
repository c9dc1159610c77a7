#pragma once

// Ordinates of the nontrivial zeros of ζ on the critical line.
//
// All ordinates are taken to have real part 1/2; at the heights this library
// works at every zero is known to be on the line.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "zetasum/real.hpp"

namespace zetasum {

enum class ZeroSource { computed, imported };

struct ZeroTable {
  std::vector<Real> ordinates;  // strictly ascending, positive
  Real verified_height;         // complete (no missing zeros) on (0, verified_height]
  ZeroSource source = ZeroSource::computed;
  int precision_digits = 0;

  std::size_t size() const noexcept { return ordinates.size(); }
  /// Number of ordinates γ <= T.
  std::size_t count_up_to(const Real& T) const;
};

/// Gram points g_j (θ(g_j) = jπ) in (t_lo, t_hi), from the asymptotic θ in
/// double precision. They only serve as a search grid.
std::vector<double> gram_points(double t_lo, double t_hi);

/// All zeros with 0 < γ <= t_max, refined to the context precision and
/// certified complete against count_zeros_rvm(t_max).
ZeroTable find_zeros(const Real& t_max, const PrecisionContext& ctx, int threads = 1);

/// S(T) = arg ζ(1/2 + iT) / π by continuous variation along Im s = T from
/// Re s = 3.
Real zero_count_S(const Real& T, const PrecisionContext& ctx);

/// N(T) = θ(T)/π + 1 + S(T), exactly, for T >= 2 not an ordinate.
long count_zeros_rvm(const Real& T, const PrecisionContext& ctx);

/// One decimal ordinate per line, ascending; '#' lines are comments, and a
/// "# verified_height: H" comment declares completeness up to H. Imported
/// ordinates are re-verified (|ζ(1/2+iγ)| and the zero count) unless
/// `trust` is set.
ZeroTable import_zeros(std::istream& in, const PrecisionContext& ctx, bool trust = false);
void export_zeros(const ZeroTable& table, std::ostream& out);

/// T itself when every ordinate is farther than 1/(2 log T) from it,
/// otherwise the midpoint of the two ordinates bracketing T.
Real safe_truncation_height(const Real& T, const ZeroTable& table);

}  // namespace zetasum
