#pragma once

// Riemann zeta and its companions at extended precision.
//
// zeta() and the zeta_* Taylor routines use Euler-Maclaurin summation with
// the tail carried as a truncated power series, so ζ, ζ', ..., ζ^(n) come out
// of one pass. The *_cauchy routines differentiate by the trapezoidal rule on
// a circle; they are the independent second route used for χ^(k) and as a
// cross-check of the series route.

#include <vector>

#include "zetasum/real.hpp"

namespace zetasum {

/// Converts `x` to the context's precision.
Real at(const PrecisionContext& ctx, const Real& x);
CValue at(const PrecisionContext& ctx, const CValue& z);
/// σ + it from decimal strings, exact to the context precision.
CValue make_s(const PrecisionContext& ctx, std::string_view sigma, std::string_view t);
CValue make_s(const PrecisionContext& ctx, double sigma, double t);

CValue zeta(const CValue& s, const PrecisionContext& ctx);

/// Taylor coefficients a_0..a_order of ζ(s + e), so ζ^(k)(s) = k! a_k.
std::vector<CValue> zeta_taylor(const CValue& s, int order, const PrecisionContext& ctx);

/// ζ^(n)(s) through zeta_taylor.
CValue zeta_derivative(int n, const CValue& s, const PrecisionContext& ctx);

/// ζ^(n)(s) by trapezoidal Cauchy integration on |z - s| = min(0.25, |s-1|/2).
CValue zeta_derivative_cauchy(int n, const CValue& s, const PrecisionContext& ctx);

/// χ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s), so that ζ(s) = χ(s) ζ(1-s).
CValue chi(const CValue& s, const PrecisionContext& ctx);

/// Taylor coefficients of χ about s by Cauchy integration.
std::vector<CValue> chi_taylor_cauchy(const CValue& s, int order, const PrecisionContext& ctx);

/// |ζ^(n)(s) - (1/χ(1-s)) Σ_k C(n,k) (-1)^k χ^(n-k)(s)/χ(s) ζ^(k)(1-s)| for
/// 0 < Re s < 1.
Real functional_equation_residual(int n, const CValue& s, const PrecisionContext& ctx);

/// Principal log Γ(z) (continuous off the negative real axis).
CValue log_gamma(const CValue& z, const PrecisionContext& ctx);
/// ψ(z) = Γ'(z)/Γ(z).
CValue digamma(const CValue& z, const PrecisionContext& ctx);

/// ξ'/ξ(s) = (2s-1)/(s(s-1)) - log(π)/2 + ψ(s/2)/2 + ζ'/ζ(s).
CValue xi_log_derivative(const CValue& s, const PrecisionContext& ctx);

/// log ξ(s) with ξ(s) = s(s-1) π^{-s/2} Γ(s/2) ζ(s) / 2 (principal branch of
/// each factor; only differences are meaningful).
CValue log_xi(const CValue& s, const PrecisionContext& ctx);

Real riemann_siegel_theta(const Real& t, const PrecisionContext& ctx);
/// Z(t) = e^{iθ(t)} ζ(1/2 + it), real for real t.
Real hardy_Z(const Real& t, const PrecisionContext& ctx);

struct HardyZJet {
  Real value;
  Real derivative;
};
/// Z(t) and Z'(t) together (one zeta pass plus one Γ/ψ pass).
HardyZJet hardy_Z_jet(const Real& t, const PrecisionContext& ctx);

}  // namespace zetasum
