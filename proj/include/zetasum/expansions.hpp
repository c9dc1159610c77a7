#pragma once

// Right-hand sides of the asymptotic formulas for Σ_{0<γ<=T} ζ^(n)(ρ) X^ρ,
// each returned term by term.

#include <string>
#include <string_view>
#include <vector>

#include "zetasum/arith.hpp"
#include "zetasum/constants.hpp"
#include "zetasum/real.hpp"

namespace zetasum {

/// Which error envelope to attach.
///   rh:            √T log^{n+2} T
///   unconditional: T exp(-√(log T)), shape only (the constant in the
///                  exponent is unknown and taken as 1)
enum class ErrorShape { rh, unconditional };

struct ExpansionTerm {
  std::string label;
  CValue value;
};

struct ExpansionBreakdown {
  std::vector<ExpansionTerm> terms;  // in display order
  CValue total;
  Real error_scale;
  struct Meta {
    int n = 0;
    std::string X;
    Real T;
    std::string formula;
    int digits = 0;
    std::string error_shape = "rh";
    std::string note;
  } meta;

  /// Value of the term with this label; InvalidArgument if absent.
  const CValue& term(std::string_view label) const;
};

ExpansionBreakdown theorem1_rhs(int n, const RationalX& X, const Real& T, const PrecisionContext& ctx);
/// Same sum with log^n(rX) expanded binomially in the last term.
ExpansionBreakdown explicit2_rhs(int n, const RationalX& X, const Real& T, const PrecisionContext& ctx);

/// Integer X. Terms double_sum, triple_sum, a_sum, log_bracket. X = 1 is
/// answered by general_sc_rhs.
ExpansionBreakdown corollary_integer_rhs(int n, const RationalX& X, const Real& T, const LaurentTable& tables,
                                         const PrecisionContext& ctx, ErrorShape shape = ErrorShape::rh);
/// The same expansion before log(T/2πX) is split into log(T/2π) - log X.
ExpansionBreakdown corollary_integer_rhs_prebinomial(int n, const RationalX& X, const Real& T,
                                                     const LaurentTable& tables, const PrecisionContext& ctx);

/// Σ_{0<γ<=T} ζ^(n)(ρ). Terms leading, stieltjes_sum, a_term.
ExpansionBreakdown general_sc_rhs(int n, const Real& T, const LaurentTable& tables, const PrecisionContext& ctx,
                                  ErrorShape shape = ErrorShape::rh);

/// Asymptotic for S = (-1)^{k+1} Σ_{mr<=Y} Λ(r) log^k r.
ExpansionBreakdown s_asymptotic(int k, const Real& Y, const LaurentTable& tables, const PrecisionContext& ctx);

/// Σ ζ'(ρ) main terms (X = 1).
ExpansionBreakdown fujii_shanks_rhs(const Real& T, const LaurentTable& tables, const PrecisionContext& ctx);
/// Σ ζ'(ρ) X^ρ main terms for integer X.
ExpansionBreakdown fujii_integer_rhs(const RationalX& X, const Real& T, const LaurentTable& tables,
                                     const PrecisionContext& ctx);

/// -(T/2π) Λ(X), X > 1.
CValue landau_rhs(const RationalX& X, const Real& T, const PrecisionContext& ctx);

/// Formula ids: theorem1, explicit2, integer, integer-prebinomial,
/// general-sc, fujii2, fujii4, landau, s-asym. For s-asym, n is k and
/// Y = T/(2πX).
ExpansionBreakdown evaluate_rhs(std::string_view formula, int n, const RationalX& X, const Real& T,
                                const PrecisionContext& ctx, ErrorShape shape = ErrorShape::rh);
bool is_known_formula(std::string_view formula);

}  // namespace zetasum
