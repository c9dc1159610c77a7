#include "zetasum/expansions.hpp"

#include "zetasum/numkern.hpp"
#include "zetasum/series.hpp"

namespace zetasum {

namespace {

struct Setup {
  Bits bits;
  Real T;
  Real T_2pi;  // T/2π
  Real L;      // log(T/2π)
  Real ell;    // log X
  Real Xv;     // X
};

Setup setup(const RationalX& X, const Real& T, const PrecisionContext& ctx) {
  if (!(T > 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  const Bits bits = ctx.bits();
  Setup s{bits, at(ctx, T), Real(bits), Real(bits), Real(bits), X.value(bits)};
  s.T_2pi = s.T / (2L * Real::pi(bits));
  s.L = log(s.T_2pi);
  s.ell = log(s.Xv);
  return s;
}

long sign_pow(int n) { return n % 2 == 0 ? 1 : -1; }

Real error_scale(int n, const Real& T, ErrorShape shape) {
  if (!(T > 1.0)) throw Error(ErrorCode::InvalidArgument, "error envelope needs T > 1");
  const Real lt = log(T);
  if (shape == ErrorShape::rh) return sqrt(T) * pow(lt, n + 2);
  return T * exp(-sqrt(lt));
}

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::OutOfContract, "right-hand sides are stated for n >= 1 only");
}

void check_tables(const LaurentTable& tables, int need) {
  if (tables.j_max < need || static_cast<int>(tables.C.size()) <= need || static_cast<int>(tables.A.size()) <= need)
    throw Error(ErrorCode::TablesTooShallow,
                "Laurent tables reach j=" + std::to_string(tables.j_max) + ", need " + std::to_string(need));
}

// -1 + Σ_{j<=l} (-1)^j C_j
Real stieltjes_partial(const LaurentTable& tables, int l, Bits bits) {
  Real s(-1L, bits);
  for (int j = 0; j <= l; ++j) {
    if (j % 2 == 0)
      s += tables.C[static_cast<std::size_t>(j)];
    else
      s -= tables.C[static_cast<std::size_t>(j)];
  }
  return s;
}

Real big(long long v, Bits bits) { return Real(static_cast<long>(v), bits); }

void finish(ExpansionBreakdown& b, Bits bits) {
  b.total = CValue(bits);
  for (const auto& t : b.terms) b.total += t.value;
  require_finite(b.total, b.meta.formula.c_str());
}

ExpansionBreakdown start(std::string formula, int n, const RationalX& X, const Setup& s,
                         const PrecisionContext& ctx) {
  ExpansionBreakdown b;
  b.meta.n = n;
  b.meta.X = X.to_string();
  b.meta.T = s.T;
  b.meta.formula = std::move(formula);
  b.meta.digits = ctx.digits;
  return b;
}

CValue real_c(Real r) { return CValue(std::move(r)); }

// The Δ(X)-gated part shared by theorem1 and explicit2.
void theorem1_head(ExpansionBreakdown& b, int n, const RationalX& X, const Setup& s, const PrecisionContext& ctx) {
  const Bits bits = s.bits;
  const long sg = sign_pow(n);
  const int delta = delta_indicator(X);
  const Real ell_n = pow(s.ell, n);
  const Real pi = Real::pi(bits);
  const Real Y = s.T_2pi / s.Xv;

  // Computed even when Δ(X) = 0 so the breakdown shows what was gated.
  CValue delta_main(s.L / 2L - Real(0.5, bits), pi / 4L);
  delta_main *= s.T_2pi * ell_n * (sg * delta);
  CValue delta_conv = real_c(s.T_2pi * conv_sum_at_X(n, X, ctx) * (-sg * delta));

  CValue plain(s.ell / 2L, -(pi / 4L));
  plain *= s.Xv * ell_n * sg;
  plain *= exp_sum(X, Y, ctx);

  CValue logsum = exp_log_sum(X, Y, ctx);
  logsum *= s.Xv * ell_n / 2L * sg;

  b.terms.push_back({"delta_main", delta_main});
  b.terms.push_back({"delta_conv", delta_conv});
  b.terms.push_back({"expsum_plain", plain});
  b.terms.push_back({"expsum_log", logsum});
}

}  // namespace

const CValue& ExpansionBreakdown::term(std::string_view label) const {
  for (const auto& t : terms)
    if (t.label == label) return t.value;
  throw Error(ErrorCode::InvalidArgument, "no term '" + std::string(label) + "' in " + meta.formula);
}

ExpansionBreakdown theorem1_rhs(int n, const RationalX& X, const Real& T, const PrecisionContext& ctx) {
  check_n(n);
  const Setup s = setup(X, T, ctx);
  ExpansionBreakdown b = start("theorem1", n, X, s, ctx);
  theorem1_head(b, n, X, s, ctx);
  const Real Y = s.T_2pi / s.Xv;
  CValue osc = mangoldt_exp_sum(n, X, Y, ctx);
  osc *= s.Xv * -sign_pow(n);
  b.terms.push_back({"mangoldt_osc", osc});
  b.error_scale = error_scale(n, s.T, ErrorShape::rh);
  finish(b, s.bits);
  return b;
}

ExpansionBreakdown explicit2_rhs(int n, const RationalX& X, const Real& T, const PrecisionContext& ctx) {
  check_n(n);
  const Setup s = setup(X, T, ctx);
  ExpansionBreakdown b = start("explicit2", n, X, s, ctx);
  theorem1_head(b, n, X, s, ctx);
  const Real Y = s.T_2pi / s.Xv;
  CValue osc(s.bits);
  for (int k = 0; k <= n; ++k) {
    CValue part = mangoldt_exp_sum_powers(k, X, Y, ctx);
    part *= big(binomial(n, k), s.bits) * pow(s.ell, n - k);
    osc += part;
  }
  osc *= s.Xv * -sign_pow(n);
  b.terms.push_back({"mangoldt_osc", osc});
  b.error_scale = error_scale(n, s.T, ErrorShape::rh);
  finish(b, s.bits);
  return b;
}

ExpansionBreakdown corollary_integer_rhs(int n, const RationalX& X, const Real& T, const LaurentTable& tables,
                                         const PrecisionContext& ctx, ErrorShape shape) {
  check_n(n);
  if (!X.is_integer()) throw Error(ErrorCode::XNotInteger, "integer-X expansion needs X in Z, got " + X.to_string());
  check_tables(tables, n);
  if (X.num == 1) {
    ExpansionBreakdown b = general_sc_rhs(n, T, tables, ctx, shape);
    b.meta.formula = "integer";
    b.meta.X = X.to_string();
    b.meta.note = "X = 1 evaluated by general-sc";
    return b;
  }
  const Setup s = setup(X, T, ctx);
  const Bits bits = s.bits;
  ExpansionBreakdown b = start("integer", n, X, s, ctx);
  const Real pref = s.T_2pi * -sign_pow(n);  // (-1)^{n+1} T/2π

  Real dbl(bits);
  for (int k = 0; k <= n; ++k)
    for (int u = 0; u <= k + 1; ++u) {
      Real t = big(binomial(n, k) * binomial(k + 1, u), bits) / static_cast<long>(k + 1);
      t *= pow(s.L, k + 1 - u) * pow(s.ell, n - k + u) * sign_pow(u);
      dbl += t;
    }

  Real tri(bits);
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= k; ++l) {
      const Real cl = stieltjes_partial(tables, l, bits) * big(factorial(l), bits);
      for (int u = 0; u <= k - l; ++u) {
        Real t = big(binomial(n, k) * binomial(k, l) * binomial(k - l, u), bits) * cl;
        t *= pow(s.L, k - l - u) * pow(s.ell, n - k + u) * sign_pow(l + u);
        tri += t;
      }
    }

  Real asum(bits);
  for (int k = 0; k <= n; ++k) {
    Real t = big(binomial(n, k) * factorial(k), bits) * tables.A[static_cast<std::size_t>(k)];
    t *= pow(s.ell, n - k) * sign_pow(k + 1);
    asum += t;
  }

  const Real bracket = pow(s.ell, n) * (s.L - 1L) - conv_sum_at_X(n, X, ctx);

  b.terms.push_back({"double_sum", real_c(pref * dbl)});
  b.terms.push_back({"triple_sum", real_c(pref * tri)});
  b.terms.push_back({"a_sum", real_c(pref * asum)});
  b.terms.push_back({"log_bracket", real_c(-(pref * bracket))});
  b.error_scale = error_scale(n, s.T, shape);
  b.meta.error_shape = shape == ErrorShape::rh ? "rh" : "unconditional-shape-only";
  finish(b, bits);
  return b;
}

ExpansionBreakdown corollary_integer_rhs_prebinomial(int n, const RationalX& X, const Real& T,
                                                     const LaurentTable& tables, const PrecisionContext& ctx) {
  check_n(n);
  if (!X.is_integer()) throw Error(ErrorCode::XNotInteger, "integer-X expansion needs X in Z, got " + X.to_string());
  check_tables(tables, n);
  const Setup s = setup(X, T, ctx);
  const Bits bits = s.bits;
  ExpansionBreakdown b = start("integer-prebinomial", n, X, s, ctx);
  const Real LY = log(s.T_2pi / s.Xv);  // log(T/2πX), not split

  const Real head = s.T_2pi * (pow(s.ell, n) * (s.L - 1L) - conv_sum_at_X(n, X, ctx)) * sign_pow(n);

  Real inner_total(bits);
  for (int k = 0; k <= n; ++k) {
    Real inner = pow(LY, k + 1) / static_cast<long>(k + 1);
    for (int l = 0; l <= k; ++l) {
      Real t = big(binomial(k, l) * factorial(l), bits) * stieltjes_partial(tables, l, bits);
      inner += t * pow(LY, k - l) * sign_pow(l);
    }
    inner += big(factorial(k), bits) * tables.A[static_cast<std::size_t>(k)] * sign_pow(k + 1);
    inner_total += big(binomial(n, k), bits) * pow(s.ell, n - k) * inner;
  }
  b.terms.push_back({"main_bracket", real_c(head)});
  b.terms.push_back({"binomial_sum", real_c(s.T_2pi * inner_total * -sign_pow(n))});
  b.error_scale = error_scale(n, s.T, ErrorShape::rh);
  finish(b, bits);
  return b;
}

ExpansionBreakdown general_sc_rhs(int n, const Real& T, const LaurentTable& tables, const PrecisionContext& ctx,
                                  ErrorShape shape) {
  check_n(n);
  check_tables(tables, n);
  const RationalX one(1, 1);
  const Setup s = setup(one, T, ctx);
  const Bits bits = s.bits;
  ExpansionBreakdown b = start("general-sc", n, one, s, ctx);
  const long sg1 = -sign_pow(n);  // (-1)^{n+1}

  Real lead = s.T_2pi * pow(s.L, n + 1) / static_cast<long>(n + 1) * sg1;
  Real mid(bits);
  for (int k = 0; k <= n; ++k) {
    Real t = big(binomial(n, k) * factorial(k), bits) * stieltjes_partial(tables, k, bits);
    mid += t * pow(s.L, n - k) * sign_pow(k);
  }
  mid *= s.T_2pi * sg1;
  Real aterm = big(factorial(n), bits) * tables.A[static_cast<std::size_t>(n)] * s.T_2pi;

  b.terms.push_back({"leading", real_c(lead)});
  b.terms.push_back({"stieltjes_sum", real_c(mid)});
  b.terms.push_back({"a_term", real_c(aterm)});
  b.error_scale = error_scale(n, s.T, shape);
  b.meta.error_shape = shape == ErrorShape::rh ? "rh" : "unconditional-shape-only";
  finish(b, bits);
  return b;
}

ExpansionBreakdown s_asymptotic(int k, const Real& Y, const LaurentTable& tables, const PrecisionContext& ctx) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 0");
  if (!(Y >= 2.0)) throw Error(ErrorCode::InvalidArgument, "S-sum asymptotic needs Y >= 2");
  check_tables(tables, k);
  const Bits bits = ctx.bits();
  const Real y = at(ctx, Y);
  const Real LY = log(y);
  ExpansionBreakdown b;
  b.meta.n = k;
  b.meta.X = "";
  b.meta.T = y;
  b.meta.formula = "s-asym";
  b.meta.digits = ctx.digits;
  const long sg1 = -sign_pow(k);

  Real lead = y * pow(LY, k + 1) / static_cast<long>(k + 1) * sg1;
  Real mid(bits);
  for (int l = 0; l <= k; ++l) {
    Real t = big(binomial(k, l) * factorial(l), bits) * stieltjes_partial(tables, l, bits);
    mid += t * pow(LY, k - l) * sign_pow(l);
  }
  mid *= y * sg1;
  Real aterm = big(factorial(k), bits) * tables.A[static_cast<std::size_t>(k)] * y;

  b.terms.push_back({"leading", real_c(lead)});
  b.terms.push_back({"stieltjes_sum", real_c(mid)});
  b.terms.push_back({"a_term", real_c(aterm)});
  b.error_scale = sqrt(y) * pow(LY, k + 2);
  finish(b, bits);
  return b;
}

ExpansionBreakdown fujii_shanks_rhs(const Real& T, const LaurentTable& tables, const PrecisionContext& ctx) {
  check_tables(tables, 1);
  const RationalX one(1, 1);
  const Setup s = setup(one, T, ctx);
  ExpansionBreakdown b = start("fujii2", 1, one, s, ctx);
  const Real& C0 = tables.C[0];
  const Real& C1 = tables.C[1];
  b.terms.push_back({"log2_term", real_c(s.T_2pi * pow(s.L, 2) / 2L)});
  b.terms.push_back({"log_term", real_c((C0 - 1L) * s.T_2pi * s.L)});
  b.terms.push_back({"const_term", real_c((1L - C0 - C0 * C0 + C1 * 3L) * s.T_2pi)});
  b.error_scale = error_scale(1, s.T, ErrorShape::rh);
  finish(b, s.bits);
  return b;
}

ExpansionBreakdown fujii_integer_rhs(const RationalX& X, const Real& T, const LaurentTable& tables,
                                     const PrecisionContext& ctx) {
  if (!X.is_integer()) throw Error(ErrorCode::XNotInteger, "integer-X formula needs X in Z, got " + X.to_string());
  check_tables(tables, 1);
  const Setup s = setup(X, T, ctx);
  ExpansionBreakdown b = start("fujii4", 1, X, s, ctx);
  const Real& C0 = tables.C[0];
  const Real& C1 = tables.C[1];
  const Real c = 1L - C0 - C0 * C0 + C1 * 3L + conv_sum_at_X(1, X, ctx) - (C0 - 1L + s.ell / 2L) * s.ell;
  b.terms.push_back({"log2_term", real_c(s.T_2pi * pow(s.L, 2) / 2L)});
  b.terms.push_back({"log_term", real_c((C0 - 1L - s.ell) * s.T_2pi * s.L)});
  b.terms.push_back({"const_term", real_c(c * s.T_2pi)});
  b.error_scale = error_scale(1, s.T, ErrorShape::unconditional);
  b.meta.error_shape = "unconditional-shape-only";
  finish(b, s.bits);
  return b;
}

CValue landau_rhs(const RationalX& X, const Real& T, const PrecisionContext& ctx) {
  if (X.num <= X.den) throw Error(ErrorCode::OutOfContract, "Landau's formula is stated for X > 1");
  const Bits bits = ctx.bits();
  Real lam = X.is_integer() ? von_mangoldt(X.num, ctx) : Real(bits);
  Real v = -(at(ctx, T) / (2L * Real::pi(bits)) * lam);
  return CValue(std::move(v));
}

bool is_known_formula(std::string_view f) {
  for (const char* k : {"theorem1", "explicit2", "integer", "integer-prebinomial", "general-sc", "fujii2", "fujii4",
                        "landau", "s-asym"})
    if (f == k) return true;
  return false;
}

ExpansionBreakdown evaluate_rhs(std::string_view formula, int n, const RationalX& X, const Real& T,
                                const PrecisionContext& ctx, ErrorShape shape) {
  auto tables_for = [&](int need) -> const LaurentTable& { return laurent_table(std::max(need, 1), ctx); };
  if (formula == "theorem1") return theorem1_rhs(n, X, T, ctx);
  if (formula == "explicit2") return explicit2_rhs(n, X, T, ctx);
  if (formula == "integer") return corollary_integer_rhs(n, X, T, tables_for(n), ctx, shape);
  if (formula == "integer-prebinomial") return corollary_integer_rhs_prebinomial(n, X, T, tables_for(n), ctx);
  if (formula == "general-sc") {
    if (X.num != 1 || X.den != 1) throw Error(ErrorCode::InvalidArgument, "general-sc is the X = 1 sum");
    return general_sc_rhs(n, T, tables_for(n), ctx, shape);
  }
  if (formula == "fujii2") {
    if (X.num != 1 || X.den != 1) throw Error(ErrorCode::InvalidArgument, "fujii2 is the X = 1 sum");
    return fujii_shanks_rhs(T, tables_for(1), ctx);
  }
  if (formula == "fujii4") return fujii_integer_rhs(X, T, tables_for(1), ctx);
  if (formula == "s-asym") {
    const Real Y = at(ctx, T) / (2L * Real::pi(ctx.bits()) * X.value(ctx.bits()));
    return s_asymptotic(n, Y, tables_for(n), ctx);
  }
  if (formula == "landau") {
    ExpansionBreakdown b;
    b.meta.n = 0;
    b.meta.X = X.to_string();
    b.meta.T = at(ctx, T);
    b.meta.formula = "landau";
    b.meta.digits = ctx.digits;
    b.terms.push_back({"landau_main", landau_rhs(X, T, ctx)});
    b.error_scale = log(at(ctx, T));
    b.meta.error_shape = "log";
    finish(b, ctx.bits());
    return b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown formula '" + std::string(formula) + "'");
}

}  // namespace zetasum
