#include "zetasum/arith.hpp"

#include <charconv>
#include <cmath>
#include <mutex>
#include <numeric>
#include <vector>

namespace zetasum {

namespace {

constexpr std::uint64_t kSieveLimit = 1000000;

const std::vector<std::uint32_t>& spf_table() {
  static std::vector<std::uint32_t> spf;
  static std::once_flag once;
  std::call_once(once, [] {
    spf.assign(kSieveLimit + 1, 0);
    for (std::uint64_t i = 2; i <= kSieveLimit; ++i) {
      if (spf[i]) continue;
      for (std::uint64_t j = i; j <= kSieveLimit; j += i)
        if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
  });
  return spf;
}

std::uint64_t floor_count(const Real& Y) {
  if (!Y.is_finite()) throw Error(ErrorCode::NonFinite, "non-finite summation bound");
  if (Y < 1.0) return 0;
  return static_cast<std::uint64_t>(Y.to_long_floor());
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// e^{2πi a/q}
CValue unit_root(std::uint64_t a, std::uint64_t q, const Real& two_pi) {
  if (a == 0) return CValue(1L, 0L, two_pi.bits());
  Real x = two_pi * Real(static_cast<long>(a), two_pi.bits()) / Real(static_cast<long>(q), two_pi.bits());
  return expi(x);
}

// Σ_{m=1}^{M} e^{2πi m p/q} with p/q in lowest terms. Whole periods cancel
// when q > 1, so at most q - 1 terms are ever evaluated.
CValue periodic_sum(std::uint64_t p, std::uint64_t q, std::uint64_t M, const Real& two_pi) {
  const Bits bits = two_pi.bits();
  if (q == 1) return CValue(Real(static_cast<long>(M), bits), Real(bits));
  CValue s(bits);
  const std::uint64_t rest = M % q;
  const std::uint64_t step = p % q;
  std::uint64_t a = 0;
  for (std::uint64_t m = 1; m <= rest; ++m) {
    a += step;
    if (a >= q) a -= q;
    s += unit_root(a, q, two_pi);
  }
  return s;
}

// r·X in lowest terms.
std::pair<std::uint64_t, std::uint64_t> scaled(const RationalX& X, std::uint64_t r) {
  std::uint64_t g = std::gcd(r, X.den);
  return {(r / g) * X.num, X.den / g};
}

Real log_u(std::uint64_t v, Bits bits) { return log(Real(static_cast<long>(v), bits)); }

// Walks the prime powers r = p^e <= M, handing (r, log p, e) to `f`.
template <class F>
void for_prime_powers(std::uint64_t M, Bits bits, F&& f) {
  for (std::uint64_t p = 2; p <= M; ++p) {
    if (smallest_prime_factor(p) != p) continue;
    Real lp = log_u(p, bits);
    long e = 1;
    for (std::uint64_t r = p;; ++e) {
      f(r, lp, e);
      if (r > M / p) break;
      r *= p;
    }
  }
}

}  // namespace

RationalX::RationalX(std::uint64_t p, std::uint64_t q, Exactness e) : num(p), den(q), exactness(e) {
  if (p == 0 || q == 0) throw Error(ErrorCode::InvalidArgument, "X must be a positive rational");
  if (p > (1ULL << 62) || q > (1ULL << 62)) throw Error(ErrorCode::InvalidArgument, "X numerator/denominator too large");
  std::uint64_t g = std::gcd(p, q);
  num = p / g;
  den = q / g;
}

RationalX RationalX::parse(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "X must be p/q or a positive decimal: '" + std::string(text) + "'"); };
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw bad();

  auto parse_u = [&](std::string_view s) {
    std::uint64_t v = 0;
    if (s.empty() || s.size() > 18) throw bad();
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw bad();
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::uint64_t p = parse_u(text.substr(0, slash)), q = parse_u(text.substr(slash + 1));
    if (p == 0 || q == 0) throw bad();
    return {p, q};
  }
  std::string digits;
  std::size_t frac = 0;
  bool point = false;
  for (char c : text) {
    if (c == '.') {
      if (point) throw bad();
      point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (point) ++frac;
    } else {
      throw bad();
    }
  }
  // Drop trailing fractional zeros and leading zeros so long literals still fit.
  while (frac > 0 && !digits.empty() && digits.back() == '0') {
    digits.pop_back();
    --frac;
  }
  auto nz = digits.find_first_not_of('0');
  if (nz == std::string::npos) throw bad();
  digits.erase(0, nz);
  if (frac > 18) throw bad();
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < frac; ++i) q *= 10;
  return {parse_u(digits), q};
}

RationalX RationalX::approximate(double x, std::uint64_t max_den) {
  if (!(x > 0) || !std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "X must be positive and finite");
  // Continued-fraction convergents.
  std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int i = 0; i < 64; ++i) {
    double a = std::floor(v);
    if (a > 4e18) break;
    auto ai = static_cast<std::uint64_t>(a);
    std::uint64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double f = v - a;
    if (f < 1e-15) break;
    v = 1 / f;
  }
  if (p1 == 0) p1 = 1;
  if (q1 == 0) q1 = 1;
  return {p1, q1, Exactness::approximated};
}

Real RationalX::value(Bits bits) const {
  return Real(static_cast<long>(num), bits) / Real(static_cast<long>(den), bits);
}

std::string RationalX::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

std::uint64_t smallest_prime_factor(std::uint64_t m) {
  if (m < 2) return 0;
  if (m <= kSieveLimit) return spf_table()[m];
  if (m % 2 == 0) return 2;
  for (std::uint64_t d = 3; d <= m / d; d += 2)
    if (m % d == 0) return d;
  return m;
}

std::uint64_t prime_power_base(std::uint64_t m) {
  if (m < 2) return 0;
  std::uint64_t p = smallest_prime_factor(m);
  while (m % p == 0) m /= p;
  return m == 1 ? p : 0;
}

Real von_mangoldt(std::uint64_t m, const PrecisionContext& ctx) {
  std::uint64_t p = prime_power_base(m);
  return p ? log_u(p, ctx.bits()) : Real(ctx.bits());
}

int delta_indicator(const RationalX& X) {
  if (X.exactness != RationalX::Exactness::exact)
    throw Error(ErrorCode::InexactX, "Δ(X) is undefined for an approximated X");
  return X.is_integer() ? 1 : 0;
}

Real conv_sum_at_X(int n, const RationalX& X, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  Real s(bits);
  if (!X.is_integer()) return s;
  const std::uint64_t x = X.num;
  for (std::uint64_t r = 2; r <= x; ++r) {
    if (x % r) continue;
    std::uint64_t p = prime_power_base(r);
    if (!p) continue;
    std::uint64_t m = x / r;
    if (m == 1 && n > 0) continue;  // log 1 = 0
    s += log_u(p, bits) * pow(log_u(m, bits), n);
  }
  return s;
}

CValue exp_sum(const RationalX& X, const Real& Y, const PrecisionContext& ctx) {
  const Real two_pi = 2L * Real::pi(ctx.bits());
  return periodic_sum(X.num, X.den, floor_count(Y), two_pi);
}

CValue exp_log_sum(const RationalX& X, const Real& Y, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Real two_pi = 2L * Real::pi(bits);
  const std::uint64_t M = floor_count(Y);
  CValue s(bits);
  if (X.den == 1) {
    for (std::uint64_t m = 2; m <= M; ++m) s.re += log_u(m, bits);
    return s;
  }
  if (X.den <= M) {
    // Collect log m by residue of mX mod 1, one root of unity per class.
    std::vector<Real> by_class(X.den, Real(bits));
    for (std::uint64_t m = 2; m <= M; ++m) by_class[mulmod(m, X.num, X.den)] += log_u(m, bits);
    for (std::uint64_t a = 0; a < X.den; ++a)
      if (!by_class[a].is_zero()) s += unit_root(a, X.den, two_pi) * by_class[a];
    return s;
  }
  for (std::uint64_t m = 2; m <= M; ++m) s += unit_root(mulmod(m, X.num, X.den), X.den, two_pi) * log_u(m, bits);
  return s;
}

CValue mangoldt_exp_sum(int n, const RationalX& X, const Real& Y, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Real two_pi = 2L * Real::pi(bits);
  const Real log_x = log(X.value(bits));
  const std::uint64_t M = floor_count(Y);
  CValue s(bits);
  for_prime_powers(M, bits, [&](std::uint64_t r, const Real& lp, long e) {
    auto [p, q] = scaled(X, r);
    CValue inner = periodic_sum(p, q, M / r, two_pi);
    if (inner.re.is_zero() && inner.im.is_zero()) return;
    const Real lr = lp * e;
    s += inner * (lp * pow(lr + log_x, n));
  });
  return s;
}

CValue mangoldt_exp_sum_powers(int k, const RationalX& X, const Real& Y, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Real two_pi = 2L * Real::pi(bits);
  const std::uint64_t M = floor_count(Y);
  CValue s(bits);
  for_prime_powers(M, bits, [&](std::uint64_t r, const Real& lp, long e) {
    auto [p, q] = scaled(X, r);
    CValue inner = periodic_sum(p, q, M / r, two_pi);
    if (inner.re.is_zero() && inner.im.is_zero()) return;
    const Real lr = lp * e;
    s += inner * (lp * pow(lr, k));
  });
  return s;
}

Real s_direct(int k, const Real& Y, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const std::uint64_t M = floor_count(Y);
  Real s(bits);
  for_prime_powers(M, bits, [&](std::uint64_t r, const Real& lp, long e) {
    const Real lr = lp * e;
    s += lp * pow(lr, k) * static_cast<long>(M / r);
  });
  return s;
}

}  // namespace zetasum
