#include "support.hpp"
#include "zetasum/numkern.hpp"
#include "zetasum/zerosum.hpp"

using namespace zetasum;
using testing::close;
using testing::code_of;

namespace {

const PrecisionContext ctx(40);
const Bits B = ctx.bits();

const ZeroTable& table() {
  static const ZeroTable t = find_zeros(Real(102L, B), ctx);
  return t;
}

}  // namespace

TEST_CASE("empty and vanishing sums") {
  CHECK(abs(lhs_zero_sum(2, RationalX(3, 1), Real(10L, B), table(), ctx)).is_zero());
  CHECK(abs(landau_lhs(RationalX(3, 1), Real(10L, B), table(), ctx)).is_zero());
  for (auto X : {RationalX(1, 1), RationalX(2, 1), RationalX(7, 2)})
    CHECK(abs(lhs_zero_sum(0, X, Real(100L, B), table(), ctx)) < testing::tol(-32));
  CValue ones = landau_lhs(RationalX(1, 1), Real(100L, B), table(), ctx);
  CHECK(close(ones, CValue(29L, 0L, B), -45));
}

TEST_CASE("29-term sum against the Cauchy-route derivative") {
  CValue ref(B);
  for (const Real& g : table().ordinates) {
    if (g > 100.0) break;
    ref += zeta_derivative_cauchy(1, CValue(Real(0.5, B), g), ctx);
  }
  CValue lhs = lhs_zero_sum(1, RationalX(1, 1), Real(100L, B), table(), ctx);
  CHECK(close(lhs, ref, -32));
  // and it sits inside the envelope of the X = 1 formula
  auto rhs = fujii_shanks_rhs(Real(100L, B), laurent_table(1, ctx), ctx);
  CHECK(abs(lhs - rhs.total) / rhs.error_scale < 0.01);
}

TEST_CASE("X^rho weight") {
  RationalX X(5, 2);
  CValue ref(B);
  for (const Real& g : table().ordinates) {
    if (g > 50.0) break;
    CValue rho(Real(0.5, B), g);
    ref += zeta_derivative(2, rho, ctx) * pow(X.value(B), rho);
  }
  CHECK(close(lhs_zero_sum(2, X, Real(50L, B), table(), ctx), ref, -35));
}

TEST_CASE("thread count does not change the sum") {
  CValue a = lhs_zero_sum(2, RationalX(3, 1), Real(100L, B), table(), ctx, 1);
  CValue b = lhs_zero_sum(2, RationalX(3, 1), Real(100L, B), table(), ctx, 4);
  CHECK(a.re == b.re);
  CHECK(a.im == b.im);
}

TEST_CASE("table height is enforced") {
  CHECK(code_of([&] { lhs_zero_sum(1, RationalX(2, 1), Real(150L, B), table(), ctx); }) ==
        ErrorCode::InsufficientTable);
  CHECK(code_of([&] { lhs_zero_sum(-1, RationalX(2, 1), Real(50L, B), table(), ctx); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("compare") {
  std::vector<Real> one{Real(80L, B)};
  Comparison c = compare(1, RationalX(2, 1), one, "theorem1", table(), ctx);
  REQUIRE(c.reports.size() == 1);
  const auto& r = c.reports[0];
  CHECK(r.residual.re == (r.lhs - r.rhs).re);
  CHECK(r.residual.im == (r.lhs - r.rhs).im);
  CHECK(r.meta.zero_count == table().count_up_to(r.meta.T_effective));
  CHECK(r.meta.formula == "theorem1");
  CHECK(c.growth == Real(1L, B));

  std::vector<Real> grid{Real(40L, B), Real(70L, B), Real(100L, B)};
  Comparison g = compare(1, RationalX(1, 1), grid, "general-sc", table(), ctx);
  REQUIRE(g.reports.size() == 3);
  CHECK(g.c_hat < 0.1);
  for (auto& rep : g.reports) CHECK(rep.normalized_residual <= g.c_hat);

  std::vector<Real> bad{Real(70L, B), Real(40L, B)};
  CHECK(code_of([&] { compare(1, RationalX(1, 1), bad, "general-sc", table(), ctx); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { compare(1, RationalX(1, 1), one, "s-asym", table(), ctx); }) == ErrorCode::InvalidArgument);
  std::vector<Real> high{Real(101.5, B)};
  CHECK(code_of([&] { compare(1, RationalX(1, 1), high, "general-sc", table(), ctx); }) ==
        ErrorCode::InsufficientTable);

  Comparison l = compare(0, RationalX(2, 1), grid, "landau", table(), ctx);
  for (auto& rep : l.reports) CHECK(abs(rep.residual) < log(rep.meta.T_effective) * 10L);
}
