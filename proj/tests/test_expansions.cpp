#include <random>

#include "support.hpp"
#include "zetasum/arith.hpp"
#include "zetasum/expansions.hpp"

using namespace zetasum;
using testing::close;
using testing::code_of;

namespace {

const PrecisionContext ctx(40);
const Bits B = ctx.bits();

// relative to max(1, |b|)
bool same(const CValue& a, const CValue& b, int e) {
  Real scale = max(Real(1L, B), abs(b));
  return abs(a - b) <= testing::tol(e) * scale;
}

CValue unit(unsigned long long a, unsigned long long q) {
  Real ang = Real::pi(B) * 2L * Real(static_cast<long>(a % q), B) / Real(static_cast<long>(q), B);
  return CValue(cos(ang), sin(ang));
}

// Fujii's explicit formula for Σ ζ'(ρ) X^ρ, grouped his way, with
// brute-force sums.
CValue fujii_explicit(const RationalX& X, const Real& T) {
  const Real pi = Real::pi(B), x = X.value(B), lx = log(x), T2 = T / (pi * 2L);
  const long Y = (T2 / x).to_long_floor();
  CValue s0(B), s1(B), s2(B), sl(B);
  for (long m = 1; m <= Y; ++m) {
    CValue w = unit(static_cast<unsigned long long>(m) * X.num, X.den);
    Real l = log(Real(m, B));
    s0 += w;
    s1 += w * l;
    s2 += w * (l * l);
  }
  for (long r = 2; r <= Y; ++r) {
    Real L = von_mangoldt(static_cast<std::uint64_t>(r), ctx);
    if (L.is_zero()) continue;
    for (long m = 1; m * r <= Y; ++m)
      sl += unit(static_cast<unsigned long long>(m * r) * X.num, X.den) * (L * log(Real(m, B)));
  }
  CValue out(B);
  if (X.is_integer()) {
    Real conv(B);
    for (std::uint64_t r = 2; r <= X.num; ++r)
      if (X.num % r == 0) conv += von_mangoldt(r, ctx) * log(Real(static_cast<long>(X.num / r), B));
    CValue d(lx * (log(T2) / 2L - Real(0.5, B)), lx * pi / 4L);
    out -= (d - conv) * T2;
  }
  out += s2 * x + s1 * (x * lx / 2L) - CValue(x * lx * lx / 2L, -(pi / 4L) * x * lx) * s0 - sl * x;
  return out;
}

}  // namespace

TEST_CASE("theorem1 basics") {
  Real two_pi = Real::pi(B) * 2L;
  auto b = theorem1_rhs(1, RationalX(1, 1), two_pi, ctx);
  CHECK(abs(b.total) < testing::tol(-45));
  REQUIRE(b.terms.size() == 5);
  CHECK(b.terms[0].label == "delta_main");
  CHECK(b.terms[4].label == "mangoldt_osc");
  CHECK(code_of([&] { b.term("nope"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { theorem1_rhs(0, RationalX(2, 1), Real(100L, B), ctx); }) == ErrorCode::OutOfContract);

  // the parts add up
  auto c = theorem1_rhs(3, RationalX(7, 3), Real(800L, B), ctx);
  CValue sum(B);
  for (auto& t : c.terms) sum += t.value;
  CHECK(same(sum, c.total, -45));
  CHECK(c.term("delta_main").re.is_zero());
  CHECK(close(c.error_scale, sqrt(Real(800L, B)) * pow(log(Real(800L, B)), 5L), -40));
}

TEST_CASE("theorem1 at n = 1 is Fujii's explicit formula") {
  for (auto X : {RationalX(1, 1), RationalX(2, 1), RationalX(6, 1), RationalX(5, 2), RationalX(1, 3)}) {
    for (long T : {300L, 777L}) {
      CAPTURE(X.to_string());
      CAPTURE(T);
      CHECK(same(theorem1_rhs(1, X, Real(T, B), ctx).total, fujii_explicit(X, Real(T, B)), -40));
    }
  }
}

TEST_CASE("explicit2 equals theorem1") {
  CHECK(same(explicit2_rhs(2, RationalX(3, 1), Real(300L, B), ctx).total,
             theorem1_rhs(2, RationalX(3, 1), Real(300L, B), ctx).total, -32));
  CHECK(same(explicit2_rhs(3, RationalX(5, 2), Real(400L, B), ctx).total,
             theorem1_rhs(3, RationalX(5, 2), Real(400L, B), ctx).total, -32));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    int n = 1 + static_cast<int>(rng() % 5);
    RationalX X(1 + rng() % 9, 1 + rng() % 5);
    Real T(50.0 + static_cast<double>(rng() % 3000), B);
    CAPTURE(n);
    CAPTURE(X.to_string());
    CHECK(same(explicit2_rhs(n, X, T, ctx).total, theorem1_rhs(n, X, T, ctx).total, -32));
  }
}

TEST_CASE("integer-X corollary") {
  const LaurentTable& tab = laurent_table(6, ctx);
  SUBCASE("equals the pre-binomial form") {
    for (auto [n, x, T] : {std::tuple{2, 3, 1000L}, {1, 2, 100L}, {4, 5, 2500L}, {3, 12, 321L}}) {
      CAPTURE(n);
      CAPTURE(x);
      RationalX X(static_cast<std::uint64_t>(x), 1);
      CHECK(same(corollary_integer_rhs(n, X, Real(T, B), tab, ctx).total,
                 corollary_integer_rhs_prebinomial(n, X, Real(T, B), tab, ctx).total, -32));
    }
  }
  SUBCASE("n = 1 is Fujii's integer formula") {
    for (long x : {2L, 3L, 4L, 10L}) {
      RationalX X(static_cast<std::uint64_t>(x), 1);
      CHECK(same(corollary_integer_rhs(1, X, Real(1000L, B), tab, ctx).total,
                 fujii_integer_rhs(X, Real(1000L, B), tab, ctx).total, -32));
    }
  }
  SUBCASE("X = 1 goes to the general formula") {
    auto b = corollary_integer_rhs(2, RationalX(1, 1), Real(500L, B), tab, ctx);
    CHECK(b.meta.note == "X = 1 evaluated by general-sc");
    CHECK(same(b.total, general_sc_rhs(2, Real(500L, B), tab, ctx).total, -45));
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { corollary_integer_rhs(1, RationalX(5, 2), Real(100L, B), tab, ctx); }) ==
          ErrorCode::XNotInteger);
    const LaurentTable& shallow = laurent_table(1, ctx);
    CHECK(code_of([&] { corollary_integer_rhs(3, RationalX(2, 1), Real(100L, B), shallow, ctx); }) ==
          ErrorCode::TablesTooShallow);
    CHECK(code_of([&] { general_sc_rhs(2, Real(100L, B), shallow, ctx); }) == ErrorCode::TablesTooShallow);
  }
  SUBCASE("unconditional envelope") {
    auto b = corollary_integer_rhs(1, RationalX(2, 1), Real(1000L, B), tab, ctx, ErrorShape::unconditional);
    Real T(1000L, B);
    CHECK(close(b.error_scale, T * exp(-sqrt(log(T))), -40));
  }
}

TEST_CASE("general formula at X = 1") {
  const LaurentTable& tab = laurent_table(4, ctx);
  const Real& C0 = tab.C[0];
  const Real& C1 = tab.C[1];
  Real T(1234L, B);
  Real T2 = T / (Real::pi(B) * 2L), L = log(T2);
  auto g = general_sc_rhs(1, T, tab, ctx);
  CHECK(close(g.term("leading").re, T2 * L * L / 2L, -40));
  // the last two groups together carry (-1+C0) L and 1 - C0 - C0² + 3C1
  Real rest = g.term("stieltjes_sum").re + g.term("a_term").re;
  CHECK(close(rest, (C0 - 1L) * T2 * L + (1L - C0 - C0 * C0 + C1 * 3L) * T2, -40));
  CHECK(same(g.total, fujii_shanks_rhs(T, tab, ctx).total, -45));
  CHECK(same(fujii_integer_rhs(RationalX(1, 1), T, tab, ctx).total, fujii_shanks_rhs(T, tab, ctx).total, -45));

  auto at2pi = general_sc_rhs(1, Real::pi(B) * 2L, tab, ctx);
  CHECK(close(at2pi.total.re, 1L - C0 - C0 * C0 + C1 * 3L, -45));
}

TEST_CASE("Landau") {
  CHECK(close(landau_rhs(RationalX(2, 1), Real::pi(B) * 2L, ctx), CValue(-log(Real(2L, B))), -45));
  CHECK(landau_rhs(RationalX(6, 1), Real(500L, B), ctx).re.is_zero());
  CHECK(landau_rhs(RationalX(3, 2), Real(500L, B), ctx).re.is_zero());
  CHECK(code_of([&] { landau_rhs(RationalX(1, 1), Real(500L, B), ctx); }) == ErrorCode::OutOfContract);
}

TEST_CASE("S-sum expansion against brute force") {
  const LaurentTable& tab = laurent_table(3, ctx);
  auto rel = [&](int k, long Y) {
    Real y(Y, B);
    Real direct = s_direct(k, y, ctx);
    Real signed_direct = k % 2 ? direct : -direct;
    return abs(s_asymptotic(k, y, tab, ctx).total.re - signed_direct) / abs(direct);
  };
  CHECK(rel(0, 100000) < 0.05);
  CHECK(rel(1, 100000) < 0.05);
  CHECK(rel(2, 100000) < rel(2, 10000));
  // k = 0 main terms: -(Y log Y - Y)
  Real Y(100000L, B);
  auto b = s_asymptotic(0, Y, tab, ctx);
  CHECK(close(b.term("leading").re, -(Y * log(Y)), -40));
  CHECK(code_of([&] { s_asymptotic(1, Real(1L, B), tab, ctx); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("formula dispatch") {
  CHECK(is_known_formula("theorem1"));
  CHECK(!is_known_formula("nope"));
  CHECK(code_of([&] { evaluate_rhs("nope", 1, RationalX(2, 1), Real(100L, B), ctx); }) ==
        ErrorCode::InvalidArgument);
  auto b = evaluate_rhs("integer", 2, RationalX(3, 1), Real(400L, B), ctx);
  CHECK(b.meta.formula == "integer");
  CHECK(b.meta.n == 2);
  CHECK(b.meta.digits == 40);
  auto l = evaluate_rhs("landau", 1, RationalX(2, 1), Real(400L, B), ctx);
  CHECK(l.terms.size() == 1);
  CHECK(close(l.error_scale, log(Real(400L, B)), -40));
}
