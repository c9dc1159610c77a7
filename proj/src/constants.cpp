#include "zetasum/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "zetasum/numkern.hpp"

namespace zetasum {

namespace {

constexpr int kMaxJ = 20;

void check_jmax(int j_max) {
  if (j_max < 0 || j_max > kMaxJ) throw Error(ErrorCode::InvalidArgument, "j_max must be in 0..20");
}

// Real Taylor coefficients about s = 1 of a function that is real on the real
// axis, from M trapezoidal nodes on |s-1| = radius. Conjugate symmetry halves
// the evaluations.
template <class F>
std::vector<Real> laurent_cauchy(F&& f, int j_max, double radius, const PrecisionContext& ctx) {
  if (!(radius > 0 && radius < 1)) throw Error(ErrorCode::InvalidArgument, "Cauchy radius must be in (0, 1)");
  const int M = 64 * ((ctx.digits + 14) / 15);
  // 1/radius^j amplifies absolute error.
  const int extra = static_cast<int>(std::ceil(j_max * std::log10(1 / radius))) + 3;
  const PrecisionContext inner = ctx.widened(extra);
  const Bits bits = inner.bits();
  const Real rho = Real::parse(std::to_string(radius), bits);
  const Real step = 2L * Real::pi(bits) / static_cast<long>(M);

  std::vector<Real> acc(static_cast<std::size_t>(j_max) + 1, Real(bits));
  for (int k = 0; k <= M / 2; ++k) {
    const CValue w = expi(step * static_cast<long>(k));
    const CValue fz = f(CValue(1L, 0L, bits) + w * rho, inner);
    const long weight = (k == 0 || 2 * k == M) ? 1 : 2;
    CValue p = fz;
    const CValue winv = conj(w);
    for (int j = 0; j <= j_max; ++j) {
      acc[static_cast<std::size_t>(j)] += p.re * weight;
      p *= winv;
    }
  }
  std::vector<Real> out;
  Real rpow(1L, bits);
  for (int j = 0; j <= j_max; ++j) {
    Real c = acc[static_cast<std::size_t>(j)] / (rpow * static_cast<long>(M));
    require_finite(c, "Laurent coefficient");
    out.push_back(at(ctx, c));
    rpow *= rho;
  }
  return out;
}

}  // namespace

std::vector<Real> stieltjes_C(int j_max, const PrecisionContext& ctx, double radius) {
  check_jmax(j_max);
  return laurent_cauchy(
      [](const CValue& s, const PrecisionContext& c) { return zeta(s, c) - inverse(s - 1L); }, j_max, radius, ctx);
}

std::vector<Real> israilov_A(const std::vector<Real>& C, int j_max) {
  if (j_max < 0 || static_cast<int>(C.size()) <= j_max)
    throw Error(ErrorCode::InvalidArgument, "israilov_A needs C_0..C_jmax");
  std::vector<Real> A;
  A.push_back(C[0]);
  for (int j = 1; j <= j_max; ++j) {
    Real a = C[static_cast<std::size_t>(j)] * static_cast<long>(j + 1);
    for (int k = 0; k < j; ++k) a -= A[static_cast<std::size_t>(k)] * C[static_cast<std::size_t>(j - 1 - k)];
    A.push_back(std::move(a));
  }
  return A;
}

std::vector<Real> a_oracle(int j_max, const PrecisionContext& ctx, double radius) {
  check_jmax(j_max);
  return laurent_cauchy(
      [](const CValue& s, const PrecisionContext& c) {
        auto z = zeta_taylor(s, 1, c);
        return z[1] / z[0] + inverse(s - 1L);
      },
      j_max, radius, ctx);
}

const LaurentTable& laurent_table(int j_max, const PrecisionContext& ctx) {
  check_jmax(j_max);
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, LaurentTable> cache;
  const auto key = std::make_tuple(j_max, ctx.digits, ctx.guard_digits);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LaurentTable t;
  t.C = stieltjes_C(j_max, ctx);
  t.A = israilov_A(t.C, j_max);
  t.j_max = j_max;
  t.digits = ctx.digits;
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace zetasum
