#include "zetasum/numkern.hpp"

#include <cmath>
#include <map>

#include "zetasum/series.hpp"

namespace zetasum {

Real at(const PrecisionContext& ctx, const Real& x) {
  Real r(ctx.bits());
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

CValue at(const PrecisionContext& ctx, const CValue& z) { return {at(ctx, z.re), at(ctx, z.im)}; }

CValue make_s(const PrecisionContext& ctx, std::string_view sigma, std::string_view t) {
  return {Real::parse(sigma, ctx.bits()), Real::parse(t, ctx.bits())};
}

CValue make_s(const PrecisionContext& ctx, double sigma, double t) { return {sigma, t, ctx.bits()}; }

namespace {

// log k and k^{-1/2} for k = 1..n, per thread and precision.
struct SummandCache {
  std::vector<Real> logs;
  std::vector<Real> rsqrt;
};

const SummandCache& summand_cache(Bits bits, long n) {
  thread_local std::map<Bits, SummandCache> caches;
  auto& c = caches[bits];
  while (static_cast<long>(c.logs.size()) < n) {
    const long k = static_cast<long>(c.logs.size()) + 1;
    Real l(bits), r(bits);
    mpfr_log_ui(l.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_set_ui(r.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_rec_sqrt(r.raw(), r.raw(), MPFR_RNDN);
    c.logs.push_back(std::move(l));
    c.rsqrt.push_back(std::move(r));
  }
  return c;
}

// S_i = Σ_{k<N} k^{-s} (-log k)^i / i!  for i = 0..order.
std::vector<CValue> dirichlet_head(const CValue& s, int order, long n_terms, Bits bits) {
  const auto& cache = summand_cache(bits, n_terms);
  std::vector<CValue> acc(static_cast<std::size_t>(order) + 1, CValue(bits));
  const bool on_half_line = mpfr_cmp_d(s.re.raw(), 0.5) == 0;
  Real mag(bits), ang(bits), sn(bits), cs(bits), pr(bits), pi(bits), tmp(bits);
  acc[0].re += 1;  // k = 1
  for (long k = 2; k < n_terms; ++k) {
    const Real& lk = cache.logs[static_cast<std::size_t>(k - 1)];
    if (on_half_line) {
      mpfr_set(mag.raw(), cache.rsqrt[static_cast<std::size_t>(k - 1)].raw(), MPFR_RNDN);
    } else {
      mpfr_mul(mag.raw(), s.re.raw(), lk.raw(), MPFR_RNDN);
      mpfr_neg(mag.raw(), mag.raw(), MPFR_RNDN);
      mpfr_exp(mag.raw(), mag.raw(), MPFR_RNDN);
    }
    mpfr_mul(ang.raw(), s.im.raw(), lk.raw(), MPFR_RNDN);
    mpfr_sin_cos(sn.raw(), cs.raw(), ang.raw(), MPFR_RNDN);
    // k^{-s} = mag (cos - i sin)
    mpfr_mul(pr.raw(), mag.raw(), cs.raw(), MPFR_RNDN);
    mpfr_mul(pi.raw(), mag.raw(), sn.raw(), MPFR_RNDN);
    mpfr_neg(pi.raw(), pi.raw(), MPFR_RNDN);
    mpfr_add(acc[0].re.raw(), acc[0].re.raw(), pr.raw(), MPFR_RNDN);
    mpfr_add(acc[0].im.raw(), acc[0].im.raw(), pi.raw(), MPFR_RNDN);
    for (int i = 1; i <= order; ++i) {
      mpfr_mul(pr.raw(), pr.raw(), lk.raw(), MPFR_RNDN);
      mpfr_neg(pr.raw(), pr.raw(), MPFR_RNDN);
      mpfr_mul(pi.raw(), pi.raw(), lk.raw(), MPFR_RNDN);
      mpfr_neg(pi.raw(), pi.raw(), MPFR_RNDN);
      auto& a = acc[static_cast<std::size_t>(i)];
      mpfr_add(a.re.raw(), a.re.raw(), pr.raw(), MPFR_RNDN);
      mpfr_add(a.im.raw(), a.im.raw(), pi.raw(), MPFR_RNDN);
    }
  }
  long fact = 1;
  for (int i = 2; i <= order; ++i) {
    fact *= i;
    acc[static_cast<std::size_t>(i)] /= fact;
  }
  return acc;
}

// One Euler-Maclaurin attempt with N head terms. Returns false if the
// Bernoulli tail stops decreasing before reaching the target.
bool euler_maclaurin(const CValue& s, int order, long n_terms, const PrecisionContext& ctx,
                     std::vector<CValue>& out) {
  const Bits bits = ctx.bits();
  Series total(order, bits);
  {
    auto head = dirichlet_head(s, order, n_terms, bits);
    for (int i = 0; i <= order; ++i) total[i] = std::move(head[static_cast<std::size_t>(i)]);
  }
  Real n_real(n_terms, bits);
  Real log_n = log(n_real);
  CValue n_pow_minus_s = exp(CValue(-(s.re * log_n), -(s.im * log_n)));  // N^{-s}
  Series e = power_series_of_exp(n_pow_minus_s, log_n, order);          // N^{-s-e}

  Series pole = Series::variable(s - 1, order).inverse();
  Series t1 = e * pole;
  t1 *= n_real;
  total += t1;
  Series half = e;
  half *= Real(0.5, bits);
  total += half;

  const Real eps = pow10(-ctx.total_digits(), bits);
  const Real scale = max(Real(1L, bits), total.max_abs());
  const Real inv_n2 = 1L / (n_real * n_real);

  Series poch = Series::variable(s, order);  // s (s+1) ... (s+2j-2)
  Series e_shift = e;
  e_shift *= 1L / n_real;  // N^{-s-e-2j+1} for j = 1
  Real prev_mag(bits);
  const int j_cap = 4 * ctx.total_digits() + 40;
  for (int j = 1; j <= j_cap; ++j) {
    Series term = poch * e_shift;
    term *= bernoulli_2j_over_factorial(j, bits);
    total += term;
    Real mag = term.max_abs();
    if (mag <= eps * scale) {
      out = total.coefficients();
      return true;
    }
    if (j > 2 && mag > prev_mag) return false;
    prev_mag = mag;
    poch = poch * Series::variable(s + static_cast<long>(2 * j - 1), order);
    poch = poch * Series::variable(s + static_cast<long>(2 * j), order);
    e_shift *= inv_n2;
  }
  return false;
}

const Real& cached_pi(Bits bits) {
  thread_local std::map<Bits, Real> cache;
  auto it = cache.find(bits);
  if (it == cache.end()) it = cache.emplace(bits, Real::pi(bits)).first;
  return it->second;
}

// Trapezoidal Cauchy integral: Taylor coefficients a_0..a_order of f about
// `center` from `nodes` samples on a circle of radius `radius`.
template <class F>
std::vector<CValue> cauchy_taylor(F&& f, const CValue& center, const Real& radius, int order, int nodes,
                                  Bits bits) {
  std::vector<CValue> acc(static_cast<std::size_t>(order) + 1, CValue(bits));
  const Real two_pi_over_m = cached_pi(bits) * 2L / static_cast<long>(nodes);
  for (int k = 0; k < nodes; ++k) {
    CValue w = expi(two_pi_over_m * static_cast<long>(k));
    CValue fz = f(center + w * radius);
    // Σ f(z_k) ω^{-ik}
    CValue winv = conj(w);
    CValue p = fz;
    for (int i = 0; i <= order; ++i) {
      acc[static_cast<std::size_t>(i)] += p;
      p *= winv;
    }
  }
  Real rpow(1L, bits);
  for (int i = 0; i <= order; ++i) {
    acc[static_cast<std::size_t>(i)] /= rpow * static_cast<long>(nodes);
    rpow *= radius;
  }
  return acc;
}

int cauchy_nodes(int order, const PrecisionContext& ctx) {
  return 32 * (order + 2) * ((ctx.digits + 14) / 15);
}

// Extra digits lost to the 1/r^n amplification of the Cauchy route.
int cauchy_extra_digits(int order, double radius) {
  double lost = order * std::log10(1.0 / radius) + std::lgamma(order + 1.0) / std::log(10.0);
  return static_cast<int>(std::ceil(std::max(0.0, lost))) + 3;
}

struct GammaPair {
  CValue log_gamma;
  CValue digamma;
};

// Stirling series after shifting Re z above R = 10 ceil(D/15).
GammaPair gamma_pair(const CValue& z_in, const PrecisionContext& ctx, bool want_log, bool want_psi) {
  const Bits bits = ctx.bits();
  CValue z = at(ctx, z_in);
  const int d = ctx.total_digits();
  const double big_r = 10.0 * ((d + 14) / 15);
  const double zre = z.re.to_double();
  const double zim = z.im.to_double();
  if (zim == 0.0 && zre <= 0.0 && std::abs(zre - std::round(zre)) < 1e-30) {
    throw Error(ErrorCode::InvalidArgument, "Gamma pole at non-positive integer");
  }
  long shift = 0;
  if (!(zre > 0 && std::hypot(zre, zim) >= 2 * big_r)) {
    shift = static_cast<long>(std::ceil(std::max(0.0, big_r - zre)));
  }
  GammaPair out{CValue(bits), CValue(bits)};
  CValue w = z;
  for (long k = 0; k < shift; ++k) {
    if (want_log) out.log_gamma -= log(w);
    if (want_psi) out.digamma -= inverse(w);
    w.re += 1;
  }
  const Real eps = pow10(-d, bits);
  const Real absw = abs(w);
  // Remainder growth factor sec^2(arg(w)/2).
  const Real growth = (absw * 2L) / (absw + w.re);
  const CValue winv = inverse(w);
  const CValue winv2 = winv * winv;
  if (want_log) {
    CValue s = (w - Real(0.5, bits)) * log(w) - w;
    s.re += log(cached_pi(bits) * 2L) / 2L;
    CValue p = winv;  // w^{1-2j}
    Real g = growth;
    bool done = false;
    for (int j = 1; j <= 4 * d + 40; ++j) {
      CValue term = p * (bernoulli_2j(j, bits) / static_cast<long>(2 * j * (2 * j - 1)));
      s += term;
      if (abs(term) * g < eps) {
        done = true;
        break;
      }
      p *= winv2;
      g *= growth;
    }
    if (!done) throw Error(ErrorCode::PrecisionUnachievable, "Stirling series for log Gamma did not converge");
    out.log_gamma += s;
  }
  if (want_psi) {
    CValue s = log(w) - winv / 2L;
    CValue p = winv2;  // w^{-2j}
    Real g = growth;
    bool done = false;
    for (int j = 1; j <= 4 * d + 40; ++j) {
      CValue term = p * (bernoulli_2j(j, bits) / static_cast<long>(2 * j));
      s -= term;
      if (abs(term) * g < eps) {
        done = true;
        break;
      }
      p *= winv2;
      g *= growth;
    }
    if (!done) throw Error(ErrorCode::PrecisionUnachievable, "Stirling series for digamma did not converge");
    out.digamma += s;
  }
  return out;
}

double distance_to_chi_pole(const CValue& s) {
  // Poles of χ sit at the positive odd integers.
  const double re = s.re.to_double();
  const double im = s.im.to_double();
  double best = 1e300;
  long k0 = std::max(1L, static_cast<long>(std::floor(re)));
  for (long k = k0 - 2; k <= k0 + 2; ++k) {
    if (k < 1 || (k % 2) == 0) continue;
    best = std::min(best, std::hypot(re - static_cast<double>(k), im));
  }
  if (re < 1) best = std::min(best, std::hypot(re - 1.0, im));
  return best;
}

}  // namespace

std::vector<CValue> zeta_taylor(const CValue& s_in, int order, const PrecisionContext& ctx) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "derivative order must be >= 0");
  const Bits bits = ctx.bits();
  const CValue s = at(ctx, s_in);
  if (abs(s - 1L) < pow10(-ctx.digits, bits)) {
    throw Error(ErrorCode::PoleAtOne, "zeta evaluated at its pole s = 1");
  }
  const double sabs = abs(s).to_double();
  long n_terms = std::max<long>({static_cast<long>(std::ceil(sabs / 2.0)) + 1, ctx.digits, 10});
  std::vector<CValue> out;
  for (int attempt = 0; attempt < 5; ++attempt) {
    if (euler_maclaurin(s, order, n_terms, ctx, out)) {
      for (const auto& c : out) require_finite(c, "zeta");
      return out;
    }
    n_terms *= 2;
  }
  throw Error(ErrorCode::PrecisionUnachievable, "Euler-Maclaurin tail did not reach the target precision");
}

CValue zeta(const CValue& s, const PrecisionContext& ctx) { return zeta_taylor(s, 0, ctx)[0]; }

CValue zeta_derivative(int n, const CValue& s, const PrecisionContext& ctx) {
  auto c = zeta_taylor(s, n, ctx);
  return c[static_cast<std::size_t>(n)] * factorial(n);
}

CValue zeta_derivative_cauchy(int n, const CValue& s_in, const PrecisionContext& ctx) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "derivative order must be >= 0");
  const CValue s = at(ctx, s_in);
  const double dist = abs(s - 1L).to_double();
  if (dist < 0.02) throw Error(ErrorCode::PoleTooClose, "derivative circle would reach the pole at s = 1");
  if (n == 0) return zeta(s, ctx);
  const double r = std::min(0.25, dist / 2.0);
  const PrecisionContext inner = ctx.widened(cauchy_extra_digits(n, r));
  const Bits ib = inner.bits();
  auto coeffs = cauchy_taylor([&](const CValue& z) { return zeta(z, inner); }, at(inner, s), Real(r, ib), n,
                              cauchy_nodes(n, ctx), ib);
  return at(ctx, coeffs[static_cast<std::size_t>(n)] * factorial(n));
}

CValue chi(const CValue& s_in, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const CValue s = at(ctx, s_in);
  const double re = s.re.to_double();
  if (std::abs(s.im.to_double()) < std::pow(10.0, -ctx.digits) && re > 0.5 &&
      std::abs(re - std::round(re)) < std::pow(10.0, -ctx.digits)) {
    throw Error(ErrorCode::PoleOfChi, "chi evaluated at a positive integer");
  }
  const Real& pi = cached_pi(bits);
  CValue one_minus_s = 1L - s;
  CValue lg = gamma_pair(one_minus_s, ctx, true, false).log_gamma;
  CValue expo = s * Real::log2(bits) + (s - 1L) * log(pi) + lg;
  CValue result = exp(expo) * sin(s * (pi / 2L));
  require_finite(result, "chi");
  return result;
}

std::vector<CValue> chi_taylor_cauchy(const CValue& s_in, int order, const PrecisionContext& ctx) {
  const CValue s = at(ctx, s_in);
  const double dist = distance_to_chi_pole(s);
  if (dist < 0.02) throw Error(ErrorCode::PoleOfChi, "derivative circle would reach a pole of chi");
  if (order == 0) return {chi(s, ctx)};
  const double r = std::min(0.25, dist / 2.0);
  const PrecisionContext inner = ctx.widened(cauchy_extra_digits(order, r));
  const Bits ib = inner.bits();
  auto coeffs = cauchy_taylor([&](const CValue& z) { return chi(z, inner); }, at(inner, s), Real(r, ib), order,
                              cauchy_nodes(order, ctx), ib);
  for (auto& c : coeffs) c = at(ctx, c);
  return coeffs;
}

Real functional_equation_residual(int n, const CValue& s_in, const PrecisionContext& ctx) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  const CValue s = at(ctx, s_in);
  if (!(s.re > 0.0 && s.re < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "functional-equation check needs 0 < Re s < 1");
  }
  const CValue one_minus_s = 1L - s;
  const auto zs = zeta_taylor(s, n, ctx);
  const auto z1 = zeta_taylor(one_minus_s, n, ctx);
  const auto ch = chi_taylor_cauchy(s, n, ctx);
  const CValue chi_s = chi(s, ctx);
  const CValue chi_1ms = chi(one_minus_s, ctx);
  CValue sum(ctx.bits());
  for (int k = 0; k <= n; ++k) {
    CValue chi_deriv = ch[static_cast<std::size_t>(n - k)] * factorial(n - k);
    CValue zeta_deriv = z1[static_cast<std::size_t>(k)] * factorial(k);
    CValue term = chi_deriv / chi_s * zeta_deriv * binomial(n, k);
    if (k % 2) term = -term;
    sum += term;
  }
  CValue rhs = sum / chi_1ms;
  CValue lhs = zs[static_cast<std::size_t>(n)] * factorial(n);
  return abs(lhs - rhs);
}

CValue log_gamma(const CValue& z, const PrecisionContext& ctx) {
  return gamma_pair(z, ctx, true, false).log_gamma;
}

CValue digamma(const CValue& z, const PrecisionContext& ctx) { return gamma_pair(z, ctx, false, true).digamma; }

CValue xi_log_derivative(const CValue& s_in, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const CValue s = at(ctx, s_in);
  if (abs(s).is_zero() || abs(s - 1L) < pow10(-ctx.digits, bits)) {
    throw Error(ErrorCode::InvalidArgument, "xi'/xi factors are singular at s = 0, 1");
  }
  auto z = zeta_taylor(s, 1, ctx);
  if (abs(z[0]) < pow10(-ctx.digits, bits)) {
    throw Error(ErrorCode::ZeroOfZeta, "xi'/xi evaluated at a zero of zeta");
  }
  CValue rational = (s * 2L - 1L) / (s * (s - 1L));
  CValue psi = digamma(s / 2L, ctx);
  CValue result = rational - CValue(log(cached_pi(bits)) / 2L) + psi / 2L + z[1] / z[0];
  require_finite(result, "xi_log_derivative");
  return result;
}

CValue log_xi(const CValue& s_in, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const CValue s = at(ctx, s_in);
  CValue v = log(s) + log(s - 1L) - CValue(Real::log2(bits)) - s * (log(cached_pi(bits)) / 2L) +
             log_gamma(s / 2L, ctx) + log(zeta(s, ctx));
  return v;
}

Real riemann_siegel_theta(const Real& t_in, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Real t = at(ctx, t_in);
  if (!(t > 1.0)) throw Error(ErrorCode::InvalidArgument, "theta(t) requires t > 1");
  CValue z(Real(0.25, bits), t / 2L);
  CValue lg = gamma_pair(z, ctx, true, false).log_gamma;
  return lg.im - t * log(cached_pi(bits)) / 2L;
}

Real hardy_Z(const Real& t_in, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Real t = at(ctx, t_in);
  Real theta = riemann_siegel_theta(t, ctx);
  CValue z = zeta(CValue(Real(0.5, bits), t), ctx);
  CValue rot = expi(theta) * z;
  return rot.re;
}

HardyZJet hardy_Z_jet(const Real& t_in, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Real t = at(ctx, t_in);
  if (!(t > 1.0)) throw Error(ErrorCode::InvalidArgument, "Z(t) requires t > 1");
  CValue zg(Real(0.25, bits), t / 2L);
  GammaPair g = gamma_pair(zg, ctx, true, true);
  const Real log_pi = log(cached_pi(bits));
  Real theta = g.log_gamma.im - t * log_pi / 2L;
  Real dtheta = g.digamma.re / 2L - log_pi / 2L;
  auto z = zeta_taylor(CValue(Real(0.5, bits), t), 1, ctx);
  // d/dt ζ(1/2 + it) = i ζ'(1/2 + it)
  CValue dz(-z[1].im, z[1].re);
  CValue rot = expi(theta);
  CValue value = rot * z[0];
  CValue deriv = rot * (CValue(-(dtheta * z[0].im), dtheta * z[0].re) + dz);
  return {value.re, deriv.re};
}

}  // namespace zetasum
