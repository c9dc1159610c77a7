#pragma once

// Reference values computed by routes that share nothing with the library's
// numeric kernel beyond the MPFR wrapper itself.

#include <vector>

#include "zetasum/real.hpp"

namespace oracle {

using zetasum::Bits;
using zetasum::CValue;
using zetasum::Real;

/// Bernoulli numbers B_0..B_m (B_1 = -1/2) from the binomial recurrence, exact.
std::vector<Real> bernoulli(int m, Bits bits);

/// ζ(s) for 0 < Re s, |Im s| <= 60, from Borwein's alternating-series
/// algorithm for η(s), good to about `digits` digits.
CValue zeta_borwein(const CValue& s, int digits);

/// θ(t) from Im log Γ(1/4 + it/2), with log Γ by upward shift plus Stirling.
Real theta(const Real& t, int digits);

/// Z(t) = Re(e^{iθ(t)} ζ(1/2 + it)) from the two routines above.
Real hardy_Z(const Real& t, int digits);

/// Root of hardy_Z in [lo, hi] (opposite signs) by plain bisection down to
/// 10^-digits.
Real bisect_zero(const Real& lo, const Real& hi, int digits);

/// Euler's constant as the limit of H_n - log n, Richardson-extrapolated over
/// n = n0, 2 n0, ..., 2^levels n0.
Real harmonic_limit(int n0, int levels, int digits);

/// Stieltjes γ_1 = lim Σ_{k<=M} log k / k - log² M / 2, with the tail past N
/// from Euler-Maclaurin on log x / x (closed-form derivatives).
Real stieltjes_gamma1(int N, int digits);

/// Σ_{k<=N} (-log k)^n k^{-s}, the Dirichlet partial sum of ζ^(n)(s).
CValue dirichlet_partial(int n, const CValue& s, long N, Bits bits);

}  // namespace oracle
