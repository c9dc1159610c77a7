#include "oracles.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

Bits bits_of(int digits) { return static_cast<Bits>(std::ceil(digits * 3.3219280948873623)) + 16; }

Real from_mpq(const mpq_class& q, Bits bits) {
  Real r(bits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real from_mpz(const mpz_class& z, Bits bits) {
  Real r(bits);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

}  // namespace

std::vector<Real> bernoulli(int m, Bits bits) {
  std::vector<mpq_class> B(static_cast<std::size_t>(m) + 1);
  B[0] = 1;
  for (int n = 1; n <= m; ++n) {
    // Σ_{k=0}^{n} C(n+1, k) B_k = 0
    mpq_class acc = 0;
    mpz_class c = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += c * B[k];
      c = c * (n + 1 - k) / (k + 1);
    }
    B[n] = -acc / (n + 1);
  }
  std::vector<Real> out;
  for (auto& b : B) out.push_back(from_mpq(b, bits));
  return out;
}

CValue zeta_borwein(const CValue& s, int digits) {
  const double t = std::fabs(s.im.to_double());
  if (s.re <= 0.0 || t > 60) throw std::invalid_argument("zeta_borwein: out of range");
  // error ~ (3+√8)^-n e^{π|t|/2}/|Γ(s)| ~ (3+√8)^-n e^{π|t|}
  const int n = static_cast<int>(std::ceil((digits + 1.37 * t + 10) / 0.7655));
  const Bits bits = bits_of(digits + 20);

  std::vector<mpz_class> d(static_cast<std::size_t>(n) + 1);
  mpz_class term, acc = 0, fac;
  for (int i = 0; i <= n; ++i) {
    // n (n+i-1)! 4^i / ((n-i)! (2i)!)
    mpz_class num, den, f;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n + i - 1));
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * i));
    den *= f;
    mpz_class p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(i));
    acc += n * num * p4 / den;
    d[i] = acc;
  }
  const Real dn = from_mpz(d[n], bits);
  CValue sum(bits);
  const CValue sb(Real(bits) + s.re, Real(bits) + s.im);
  for (int k = 0; k < n; ++k) {
    Real w = from_mpz(d[k] - d[n], bits) / dn;
    if (k % 2) w = -w;
    sum += pow(Real(static_cast<long>(k + 1), bits), -sb) * w;
  }
  CValue eta = -sum;
  CValue one_minus = 1L - pow(Real(2L, bits), 1L - sb);
  return eta / one_minus;
}

Real theta(const Real& t, int digits) {
  const Bits bits = bits_of(digits + 10);
  const long shift = 60;
  const int J = 40;
  const auto B = bernoulli(2 * J, bits);
  const Real half_t = Real(bits) + t / 2L;
  const Real quarter(0.25, bits);

  // Im log Γ(z) = Im log Γ(z + shift) - Σ_{k<shift} arg(z + k)
  Real im_shift(bits);
  for (long k = 0; k < shift; ++k) im_shift += atan2(half_t, quarter + k);

  const CValue w(quarter + shift, half_t);
  CValue lg = (w - Real(0.5, bits)) * log(w) - w;
  CValue wp = w;
  const CValue w2 = w * w;
  for (int j = 1; j <= J; ++j) {
    lg += inverse(wp) * (B[2 * j] / static_cast<long>(2 * j * (2 * j - 1)));
    wp *= w2;
  }
  const Real im_lg = lg.im - im_shift;
  return im_lg - half_t * log(Real::pi(bits));
}

Real hardy_Z(const Real& t, int digits) {
  const Bits bits = bits_of(digits + 10);
  const Real th = theta(t, digits);
  const CValue z = zeta_borwein(CValue(Real(0.5, bits), Real(bits) + t), digits);
  return (expi(th) * z).re;
}

Real bisect_zero(const Real& lo_in, const Real& hi_in, int digits) {
  const Bits bits = bits_of(digits + 10);
  Real lo = Real(bits) + lo_in, hi = Real(bits) + hi_in;
  int s_lo = hardy_Z(lo, digits).sign();
  if (s_lo * hardy_Z(hi, digits).sign() >= 0) throw std::invalid_argument("bisect_zero: no sign change");
  const Real tol = zetasum::pow10(-digits, bits);
  while (hi - lo > tol) {
    Real mid = (lo + hi) / 2L;
    int s = hardy_Z(mid, digits).sign();
    if (s == 0) return mid;
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2L;
}

Real harmonic_limit(int n0, int levels, int digits) {
  const Bits bits = bits_of(digits + 10);
  std::vector<Real> a;
  Real H(bits);
  long k = 0;
  for (int L = 0; L <= levels; ++L) {
    const long n = static_cast<long>(n0) << L;
    while (k < n) {
      ++k;
      H += Real(1L, bits) / k;
    }
    a.push_back(H - log(Real(n, bits)));
  }
  // error ~ Σ c_j n^-j; eliminate one power per pass
  for (int j = 1; j <= levels; ++j) {
    const long f = 1L << j;
    for (int L = levels; L >= j; --L) a[L] = (a[L] * f - a[L - 1]) / (f - 1);
  }
  return a[levels];
}

Real stieltjes_gamma1(int N, int digits) {
  const Bits bits = bits_of(digits + 10);
  const int J = 40;
  const auto B = bernoulli(2 * J, bits);
  Real sum(bits);
  for (long k = 2; k < N; ++k) {
    Real lk = log(Real(k, bits));
    sum += lk / k;
  }
  const Real n(static_cast<long>(N), bits);
  const Real ln = log(n);
  Real g = sum - ln * ln / 2L + ln / n / 2L;
  // f^(m)(x) = (-1)^m m! (log x - H_m) / x^{m+1} for f = log x / x
  Real fact(1L, bits), Hm(bits), xp = n;
  for (int m = 1; m < 2 * J; ++m) {
    fact *= static_cast<long>(m);
    Hm += Real(1L, bits) / static_cast<long>(m);
    xp *= n;
    if (m % 2 == 0) continue;
    // m = 2j-1 odd, so (-1)^m = -1
    Real fm = -(fact * (ln - Hm) / xp);
    int j = (m + 1) / 2;
    Real coef = B[2 * j];
    for (int i = 2; i <= 2 * j; ++i) coef /= static_cast<long>(i);
    g -= coef * fm;
  }
  return g;
}

CValue dirichlet_partial(int n, const CValue& s, long N, Bits bits) {
  CValue sum(bits);
  const CValue sb(Real(bits) + s.re, Real(bits) + s.im);
  for (long k = 1; k <= N; ++k) {
    const Real kk(k, bits);
    CValue term = pow(kk, -sb);
    if (n > 0) term *= pow(-log(kk), static_cast<long>(n));
    sum += term;
  }
  return sum;
}

}  // namespace oracle
