// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "zetasum/constants.hpp"
#include "zetasum/expansions.hpp"
#include "zetasum/numkern.hpp"
#include "zetasum/zeros.hpp"
#include "zetasum/zerosum.hpp"

using namespace zetasum;

namespace {

const PrecisionContext ctx(40);
const Bits B = ctx.bits();
int failures = 0;

class Clock {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void report(int id, const char* what, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string sci(const Real& x) { return x.to_string(3); }
std::string sec(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

// |a - b| / max(1, |b|)
Real rel_gap(const CValue& a, const CValue& b) { return abs(a - b) / max(Real(1L, B), abs(b)); }

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

void zero_pipeline() {
  Clock clk;
  ZeroTable t = find_zeros(Real(100L, B), ctx, threads());
  double secs = clk.seconds();
  Real worst(B);
  for (const Real& g : t.ordinates) worst = max(worst, abs(zeta(CValue(Real(0.5, B), g), ctx)));
  Real g1 = oracle::bisect_zero(Real(14.1, 256), Real(14.2, 256), 60);
  Real d1 = t.size() ? abs(t.ordinates[0] - g1) : Real(1L, B);
  bool ok = t.size() == 29 && worst < pow10(-30, B) && d1 < pow10(-35, B) && secs < 120;
  report(1, "zero pipeline", ok,
         std::to_string(t.size()) + " zeros, max|zeta| " + sci(worst) + ", |gamma_1 - bisection| " + sci(d1) + ", " +
             sec(secs));
}

void landau(const ZeroTable& table, double find_secs) {
  Clock clk;
  std::vector<Real> grid{Real(250L, B), Real(500L, B), Real(1000L, B)};
  Comparison c = compare(0, RationalX(2, 1), grid, "landau", table, ctx);
  bool ok = true;
  std::string detail;
  for (auto& r : c.reports) {
    Real lim = log(r.meta.T_effective) * 10L;
    Real dev = abs(r.residual);
    ok = ok && dev <= lim;
    detail += "T=" + std::to_string(r.meta.T_requested.to_long_floor()) + " dev " + sci(dev) + " (<= " + sci(lim) +
              "); ";
  }
  double secs = find_secs + clk.seconds();
  ok = ok && secs < 300;
  report(2, "Landau check", ok, detail + sec(secs) + " with zero finding");
}

void envelope(const ZeroTable& table) {
  std::vector<Real> grid{Real(100L, B), Real(250L, B), Real(500L, B), Real(1000L, B)};
  struct Pair {
    int n;
    RationalX X;
  };
  const Pair pairs[] = {{1, RationalX(2, 1)}, {2, RationalX(2, 1)}, {1, RationalX(3, 1)}, {2, RationalX(5, 2)},
                        {3, RationalX(1, 1)}};
  Real c_hat(B);
  bool growth_ok = true;
  std::string detail;
  for (const auto& p : pairs) {
    Comparison c = compare(p.n, p.X, grid, "theorem1", table, ctx, threads());
    c_hat = max(c_hat, c.c_hat);
    Real first = c.reports.front().normalized_residual, last = c.reports.back().normalized_residual;
    growth_ok = growth_ok && last <= first * 2L;
    detail += "(" + std::to_string(p.n) + "," + p.X.to_string() + ") growth " + sci(c.growth) + "; ";
  }
  report(3, "theorem1 residual envelope", c_hat <= 1.0 && growth_ok, "c_hat " + sci(c_hat) + "; " + detail);
}

void identities() {
  Clock clk;
  const Real limit = pow10(-ctx.digits + 8, B);
  std::mt19937_64 rng(20240611);
  Real w1(B), w2(B), w3(B), w4(B);
  for (int i = 0; i < 20; ++i) {
    int n = 1 + static_cast<int>(rng() % 5);
    RationalX X(1 + rng() % 12, 1 + rng() % 6);
    Real T(20.0 + static_cast<double>(rng() % 500000) / 100.0, B);
    w1 = max(w1, rel_gap(explicit2_rhs(n, X, T, ctx).total, theorem1_rhs(n, X, T, ctx).total));
  }
  const LaurentTable& tab = laurent_table(6, ctx);
  for (int i = 0; i < 10; ++i) {
    int n = 1 + static_cast<int>(rng() % 6);
    RationalX X(2 + rng() % 30, 1);
    Real T(20.0 + static_cast<double>(rng() % 500000) / 100.0, B);
    w2 = max(w2, rel_gap(corollary_integer_rhs(n, X, T, tab, ctx).total,
                         corollary_integer_rhs_prebinomial(n, X, T, tab, ctx).total));
  }
  // (1/2, -1 + C0, 1 - C0 - C0² + 3C1) as the coefficients of T2 L², T2 L, T2
  const Real &C0 = tab.C[0], &C1 = tab.C[1];
  for (long Ti : {100L, 1000L, 54321L}) {
    Real T(Ti, B);
    Real T2 = T / (Real::pi(B) * 2L), L = log(T2);
    auto g = general_sc_rhs(1, T, tab, ctx);
    CValue fujii(T2 * L * L / 2L + (C0 - 1L) * T2 * L + (1L - C0 - C0 * C0 + C1 * 3L) * T2);
    w3 = max(w3, rel_gap(g.total, fujii));
    w3 = max(w3, rel_gap(g.term("leading"), CValue(T2 * L * L / 2L)));
    w4 = max(w4, rel_gap(fujii_integer_rhs(RationalX(1, 1), T, tab, ctx).total, fujii_shanks_rhs(T, tab, ctx).total));
  }
  double secs = clk.seconds();
  bool ok = w1 <= limit && w2 <= limit && w3 <= limit && w4 <= limit && secs < 60;
  report(4, "identity suite", ok,
         "theorem1/explicit2 " + sci(w1) + ", corollary/pre-binomial " + sci(w2) + ", general/Fujii " + sci(w3) +
             ", Fujii X=1 " + sci(w4) + " (limit " + sci(limit) + "), " + sec(secs));
}

void constants() {
  Clock clk;
  auto C = stieltjes_C(5, ctx);
  Real c0 = oracle::harmonic_limit(1000, 9, 45);
  Real d0 = abs(C[0] - c0);
  auto A = israilov_A(C, 5);
  auto Ao = a_oracle(5, ctx);
  Real dA(B);
  for (int j = 0; j <= 5; ++j) dA = max(dA, abs(A[j] - Ao[j]) / max(Real(1L, B), abs(Ao[j])));
  double secs = clk.seconds();
  bool ok = d0 < pow10(-25, B) && dA < pow10(-20, B) && secs < 60;
  report(5, "constants", ok, "|C0 - harmonic| " + sci(d0) + ", max A_j gap " + sci(dA) + ", " + sec(secs));
}

void functional_equation() {
  std::mt19937_64 rng(99);
  Real worst(B);
  for (int i = 0; i < 20; ++i) {
    double sigma = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
    double t = 1.0 + static_cast<double>(rng() % 10000) / 100.0;
    CValue s = make_s(ctx, sigma, t);
    for (int n = 0; n <= 4; ++n) worst = max(worst, functional_equation_residual(n, s, ctx));
  }
  report(6, "functional-equation residual", worst < pow10(-30, B), "max " + sci(worst) + " over 20 points, n <= 4");
}

void s_sum() {
  Clock clk;
  const LaurentTable& tab = laurent_table(3, ctx);
  bool ok = true;
  std::string detail;
  for (int k = 0; k <= 2; ++k) {
    Real prev(B);
    for (long Y : {10000L, 100000L}) {
      Real y(Y, B);
      Real direct = s_direct(k, y, ctx);
      Real target = k % 2 ? direct : -direct;
      Real rel = abs(s_asymptotic(k, y, tab, ctx).total.re - target) / abs(direct);
      ok = ok && rel < 0.05;
      if (Y == 100000L) ok = ok && rel < prev;
      prev = rel;
      detail += "k=" + std::to_string(k) + " Y=" + std::to_string(Y) + " " + sci(rel) + "; ";
    }
  }
  double secs = clk.seconds();
  report(7, "S-sum expansion", ok && secs < 180, detail + sec(secs));
}

void vanishing(const ZeroTable& table) {
  bool ok = true;
  std::string detail;
  for (auto X : {RationalX(1, 1), RationalX(2, 1), RationalX(7, 2)}) {
    Real v = abs(lhs_zero_sum(0, X, Real(1000L, B), table, ctx, threads()));
    ok = ok && v < pow10(-25, B) * sqrt(X.value(B));
    detail += "X=" + X.to_string() + " " + sci(v) + "; ";
  }
  report(8, "n=0 vanishing", ok, detail);
}

template <class F>
void guarded(int id, const char* what, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, what, false, e.what());
  }
}

}  // namespace

int main() {
  ZeroTable table;
  double find_secs = 0;
  std::string find_error;
  try {
    Clock clk;
    table = find_zeros(Real(1001.5, B), ctx, threads());
    find_secs = clk.seconds();
    std::printf("# %zu zeros up to 1001.5 in %s\n", table.size(), sec(find_secs).c_str());
  } catch (const std::exception& e) {
    find_error = e.what();
  }
  auto with_table = [&](int id, const char* what, auto&& f) {
    if (!find_error.empty())
      report(id, what, false, "no zero table: " + find_error);
    else
      guarded(id, what, f);
  };

  guarded(1, "zero pipeline", zero_pipeline);
  with_table(2, "Landau check", [&] { landau(table, find_secs); });
  with_table(3, "theorem1 residual envelope", [&] { envelope(table); });
  guarded(4, "identity suite", identities);
  guarded(5, "constants", constants);
  guarded(6, "functional-equation residual", functional_equation);
  guarded(7, "S-sum expansion", s_sum);
  with_table(8, "n=0 vanishing", [&] { vanishing(table); });
  return failures ? 1 : 0;
}
