#include "zetasum/zerosum.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "zetasum/numkern.hpp"

namespace zetasum {

namespace {

constexpr std::size_t kBlock = 32;

// ζ^(n)(ρ_k) X^{ρ_k} for the first `count` ordinates.
std::vector<CValue> zero_terms(int n, const RationalX& X, const ZeroTable& table, std::size_t count,
                               const PrecisionContext& ctx, int threads) {
  const Bits bits = ctx.bits();
  const Real half(0.5, bits);
  const Real logx = log(X.value(bits));
  const Real sqrtx = sqrt(X.value(bits));
  std::vector<CValue> out(count, CValue(bits));
  threads = std::max(1, threads);
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(threads));
  auto work = [&](int w) {
    try {
      for (std::size_t k = static_cast<std::size_t>(w); k < count; k += static_cast<std::size_t>(threads)) {
        const Real g = at(ctx, table.ordinates[k]);
        const CValue rho(half, g);
        CValue z = n == 0 ? zeta(rho, ctx) : zeta_derivative(n, rho, ctx);
        CValue xr = expi(g * logx);
        xr *= sqrtx;
        out[k] = z * xr;
      }
    } catch (...) {
      failures[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

// Sum of v[0..count) in fixed blocks, then a fixed pairwise tree over the
// block sums.
CValue blocked_sum(const std::vector<CValue>& v, std::size_t count, Bits bits) {
  std::vector<CValue> level;
  for (std::size_t b = 0; b < count; b += kBlock) {
    CValue s(bits);
    for (std::size_t k = b; k < std::min(count, b + kBlock); ++k) s += v[k];
    level.push_back(std::move(s));
  }
  if (level.empty()) return CValue(bits);
  while (level.size() > 1) {
    std::vector<CValue> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

void require_height(const ZeroTable& table, const Real& T) {
  if (table.verified_height < T) {
    throw Error(ErrorCode::InsufficientTable, "zero table is verified to " + table.verified_height.to_fixed(20) +
                                                  ", below T = " + T.to_fixed(20));
  }
}

}  // namespace

CValue lhs_zero_sum(int n, const RationalX& X, const Real& T, const ZeroTable& table, const PrecisionContext& ctx,
                    int threads) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  require_height(table, T);
  const std::size_t count = table.count_up_to(T);
  return blocked_sum(zero_terms(n, X, table, count, ctx, threads), count, ctx.bits());
}

CValue landau_lhs(const RationalX& X, const Real& T, const ZeroTable& table, const PrecisionContext& ctx) {
  require_height(table, T);
  const Bits bits = ctx.bits();
  const std::size_t count = table.count_up_to(T);
  const Real logx = log(X.value(bits));
  const Real sqrtx = sqrt(X.value(bits));
  std::vector<CValue> terms;
  terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) terms.push_back(expi(at(ctx, table.ordinates[k]) * logx) * sqrtx);
  return blocked_sum(terms, count, bits);
}

Comparison compare(int n, const RationalX& X, const std::vector<Real>& T_grid, std::string_view formula,
                   const ZeroTable& table, const PrecisionContext& ctx, int threads, ErrorShape shape) {
  if (T_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty T grid");
  if (!is_known_formula(formula) || formula == "s-asym")
    throw Error(ErrorCode::InvalidArgument, "formula '" + std::string(formula) + "' has no zero-sum left side");
  for (std::size_t i = 1; i < T_grid.size(); ++i)
    if (!(T_grid[i - 1] < T_grid[i])) throw Error(ErrorCode::InvalidArgument, "T grid must be ascending");
  const bool landau = formula == "landau";
  const Bits bits = ctx.bits();

  std::vector<Real> effective;
  for (const Real& T : T_grid) effective.push_back(at(ctx, safe_truncation_height(T, table)));
  const std::size_t max_count = table.count_up_to(*std::max_element(
      effective.begin(), effective.end(), [](const Real& a, const Real& b) { return a < b; }));

  std::vector<CValue> terms;
  if (landau) {
    const Real logx = log(X.value(bits));
    const Real sqrtx = sqrt(X.value(bits));
    for (std::size_t k = 0; k < max_count; ++k) terms.push_back(expi(at(ctx, table.ordinates[k]) * logx) * sqrtx);
  } else {
    terms = zero_terms(n, X, table, max_count, ctx, threads);
  }

  Comparison out;
  out.c_hat = Real(bits);
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    ComparisonReport r;
    const Real& Te = effective[i];
    const std::size_t count = table.count_up_to(Te);
    r.lhs = blocked_sum(terms, count, bits);
    if (landau) {
      r.rhs = landau_rhs(X, Te, ctx);
      r.error_scale = log(Te);
    } else {
      ExpansionBreakdown b = evaluate_rhs(formula, n, X, Te, ctx, shape);
      r.rhs = b.total;
      r.error_scale = b.error_scale;
    }
    r.residual = r.lhs - r.rhs;
    r.normalized_residual = abs(r.residual) / r.error_scale;
    r.meta.n = n;
    r.meta.X = X.to_string();
    r.meta.T_requested = at(ctx, T_grid[i]);
    r.meta.T_effective = Te;
    r.meta.zero_count = count;
    r.meta.formula = std::string(formula);
    r.meta.digits = ctx.digits;
    if (out.c_hat < r.normalized_residual) out.c_hat = r.normalized_residual;
    if (!out.reports.empty() && r.normalized_residual > out.reports.back().normalized_residual)
      out.nonincreasing = false;
    out.reports.push_back(std::move(r));
  }
  const Real& first = out.reports.front().normalized_residual;
  const Real& last = out.reports.back().normalized_residual;
  out.growth = first.is_zero() ? Real(last.is_zero() ? 1L : 0L, bits) : last / first;
  return out;
}

}  // namespace zetasum
