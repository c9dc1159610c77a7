#include "zetasum/selfcheck.hpp"

#include <cmath>

#include "zetasum/constants.hpp"
#include "zetasum/expansions.hpp"
#include "zetasum/numkern.hpp"

namespace zetasum {

namespace {

// |a - b| / max(1, |a|)
double rel_gap(const CValue& a, const CValue& b) {
  Real scale = max(Real(1L, a.bits()), abs(a));
  return (abs(a - b) / scale).to_double();
}

struct Tracker {
  CheckResult r;
  Tracker(std::string name, double limit) {
    r.name = std::move(name);
    r.limit = limit;
  }
  void see(double v) { r.worst = std::max(r.worst, std::isfinite(v) ? v : INFINITY); }
  CheckResult done() {
    r.pass = r.worst < r.limit;
    return r;
  }
};

}  // namespace

std::vector<CheckResult> run_identity_suite(const PrecisionContext& ctx) {
  std::vector<CheckResult> out;
  const Bits bits = ctx.bits();
  const double tight = std::pow(10.0, -ctx.digits + 8);
  const LaurentTable& tables = laurent_table(6, ctx);

  {
    Tracker t("functional equation, n <= 4", std::pow(10.0, -ctx.digits + 10));
    for (auto [sig, im] : {std::pair{0.25, 30.0}, {0.75, 50.0}, {0.5, 20.0}})
      for (int n = 0; n <= 4; ++n) t.see(functional_equation_residual(n, make_s(ctx, sig, im), ctx).to_double());
    out.push_back(t.done());
  }
  {
    Tracker t("theorem1 == explicit2", tight);
    for (auto [n, x, T] : {std::tuple{1, "2/1", 300.0}, {2, "3", 300.0}, {3, "5/2", 400.0}, {4, "7/3", 900.0}}) {
      RationalX X = RationalX::parse(x);
      Real TT(T, bits);
      t.see(rel_gap(theorem1_rhs(n, X, TT, ctx).total, explicit2_rhs(n, X, TT, ctx).total));
    }
    out.push_back(t.done());
  }
  {
    Tracker t("integer corollary == pre-binomial form", tight);
    for (auto [n, x, T] : {std::tuple{1, 2L, 500.0}, {2, 3L, 1000.0}, {3, 6L, 700.0}, {4, 4L, 250.0}}) {
      RationalX X(static_cast<std::uint64_t>(x), 1);
      Real TT(T, bits);
      t.see(rel_gap(corollary_integer_rhs(n, X, TT, tables, ctx).total,
                    corollary_integer_rhs_prebinomial(n, X, TT, tables, ctx).total));
    }
    out.push_back(t.done());
  }
  {
    Tracker t("general-sc(n=1) == Fujii (1/2, -1+C0, 1-C0-C0^2+3C1)", tight);
    for (double T : {50.0, 100.0, 500.0, 1000.0, 5000.0}) {
      Real TT(T, bits);
      t.see(rel_gap(general_sc_rhs(1, TT, tables, ctx).total, fujii_shanks_rhs(TT, tables, ctx).total));
    }
    out.push_back(t.done());
  }
  {
    Tracker t("fujii4(X=1) == fujii2, fujii4 == integer corollary n=1", tight);
    for (double T : {100.0, 1000.0}) {
      Real TT(T, bits);
      t.see(rel_gap(fujii_integer_rhs(RationalX(1, 1), TT, tables, ctx).total, fujii_shanks_rhs(TT, tables, ctx).total));
      for (std::uint64_t x : {2, 3, 12}) {
        RationalX X(x, 1);
        t.see(rel_gap(fujii_integer_rhs(X, TT, tables, ctx).total, corollary_integer_rhs(1, X, TT, tables, ctx).total));
      }
    }
    out.push_back(t.done());
  }
  {
    Tracker t("israilov_A == Cauchy A_j, j <= 5", std::pow(10.0, -ctx.digits + 8));
    auto A = a_oracle(5, ctx);
    for (int j = 0; j <= 5; ++j) t.see(abs(A[j] - tables.A[j]).to_double());
    out.push_back(t.done());
  }
  return out;
}

}  // namespace zetasum
