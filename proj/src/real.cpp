#include "zetasum/real.hpp"

#include <cmath>
#include <string>

namespace zetasum {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfContract: return "OutOfContract";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::PoleTooClose: return "PoleTooClose";
    case ErrorCode::PoleOfChi: return "PoleOfChi";
    case ErrorCode::ZeroOfZeta: return "ZeroOfZeta";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::PrecisionUnachievable: return "PrecisionUnachievable";
    case ErrorCode::MissedZero: return "MissedZero";
    case ErrorCode::AmbiguousCount: return "AmbiguousCount";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::NotAscending: return "NotAscending";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InsufficientTable: return "InsufficientTable";
    case ErrorCode::InexactX: return "InexactX";
    case ErrorCode::XNotInteger: return "XNotInteger";
    case ErrorCode::TablesTooShallow: return "TablesTooShallow";
  }
  return "Unknown";
}

PrecisionContext::PrecisionContext(int d, int g) : digits(d), guard_digits(g) {
  if (digits < 15) throw Error(ErrorCode::InvalidArgument, "digits must be >= 15");
  if (guard_digits < 5) throw Error(ErrorCode::InvalidArgument, "guard_digits must be >= 5");
}

Bits bits_for_digits(int digits) noexcept {
  return static_cast<Bits>(std::ceil(digits * 3.321928094887362)) + 8;
}

Bits PrecisionContext::bits() const noexcept { return bits_for_digits(total_digits()); }

Real Real::parse(std::string_view text, Bits bits) {
  std::string s(text);
  Real r(bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size() || !r.is_finite()) {
    throw Error(ErrorCode::InvalidArgument, "not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::log2(Bits bits) {
  Real r(bits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

Real Real::euler_gamma(Bits bits) {
  Real r(bits);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

long Real::exponent2() const noexcept {
  if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? -(1L << 40) : (1L << 40);
  return mpfr_get_exp(v_);
}

long Real::to_long_floor() const {
  if (!is_finite()) throw Error(ErrorCode::NonFinite, "floor of non-finite value");
  return mpfr_get_si(v_, MPFR_RNDD);
}

std::string Real::to_string(int sig) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (sig < 1) sig = 1;
  if (is_zero()) {
    std::string out = "0.";
    out.append(static_cast<std::size_t>(sig > 1 ? sig - 1 : 1), '0');
    return out + "e+00";
  }
  mpfr_exp_t e10 = 0;
  char* digits = mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(sig), v_, MPFR_RNDN);
  std::string d(digits);
  mpfr_free_str(digits);
  std::string out;
  if (d.front() == '-') {
    out.push_back('-');
    d.erase(0, 1);
  }
  out.push_back(d[0]);
  out.push_back('.');
  if (d.size() > 1)
    out.append(d, 1, std::string::npos);
  else
    out.push_back('0');
  long ex = static_cast<long>(e10) - 1;
  out.push_back('e');
  out.push_back(ex < 0 ? '-' : '+');
  std::string es = std::to_string(ex < 0 ? -ex : ex);
  if (es.size() < 2) es.insert(0, "0");
  out += es;
  return out;
}

std::string Real::to_fixed(int sig) const {
  if (!is_finite() || is_zero()) return is_zero() ? "0" : to_string(sig);
  if (sig < 1) sig = 1;
  mpfr_exp_t e10 = 0;
  char* digits = mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(sig), v_, MPFR_RNDN);
  std::string d(digits);
  mpfr_free_str(digits);
  std::string out;
  if (d.front() == '-') {
    out.push_back('-');
    d.erase(0, 1);
  }
  // value = 0.d1d2d3... * 10^e10
  if (e10 <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-e10), '0');
    out += d;
  } else if (static_cast<std::size_t>(e10) >= d.size()) {
    out += d;
    out.append(static_cast<std::size_t>(e10) - d.size(), '0');
  } else {
    out.append(d, 0, static_cast<std::size_t>(e10));
    out.push_back('.');
    out.append(d, static_cast<std::size_t>(e10), std::string::npos);
  }
  return out;
}

#define ZS_UNARY(name, fn)                \
  Real name(const Real& x) {              \
    Real r(x.bits());                     \
    fn(r.raw(), x.raw(), MPFR_RNDN);      \
    return r;                             \
  }

ZS_UNARY(abs, mpfr_abs)
ZS_UNARY(sqrt, mpfr_sqrt)
ZS_UNARY(exp, mpfr_exp)
ZS_UNARY(log, mpfr_log)
ZS_UNARY(sin, mpfr_sin)
ZS_UNARY(cos, mpfr_cos)
ZS_UNARY(cosh, mpfr_cosh)
ZS_UNARY(sinh, mpfr_sinh)
#undef ZS_UNARY

void sin_cos(const Real& x, Real& s, Real& c) {
  if (s.bits() != x.bits()) s = Real(x.bits());
  if (c.bits() != x.bits()) c = Real(x.bits());
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.bits(), y.bits()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.bits(), y.bits()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.bits(), y.bits()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x.bits());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pow10(long e, Bits bits) {
  Real r(bits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------

CValue& CValue::operator*=(const CValue& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

CValue operator*(const CValue& a, const CValue& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CValue operator/(const CValue& a, const CValue& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

CValue conj(const CValue& z) { return {z.re, -z.im}; }
Real abs(const CValue& z) { return hypot(z.re, z.im); }
Real norm(const CValue& z) { return z.re * z.re + z.im * z.im; }
Real arg(const CValue& z) { return atan2(z.im, z.re); }

CValue exp(const CValue& z) {
  Real m = exp(z.re);
  Real s(z.bits()), c(z.bits());
  sin_cos(z.im, s, c);
  return {m * c, m * s};
}

CValue log(const CValue& z) { return {log(abs(z)), arg(z)}; }

CValue sin(const CValue& z) {
  Real s, c;
  sin_cos(z.re, s, c);
  return {s * cosh(z.im), c * sinh(z.im)};
}

CValue cos(const CValue& z) {
  Real s, c;
  sin_cos(z.re, s, c);
  return {c * cosh(z.im), -(s * sinh(z.im))};
}

CValue expi(const Real& x) {
  Real s(x.bits()), c(x.bits());
  sin_cos(x, s, c);
  return {c, s};
}

CValue pow(const Real& base, const CValue& z) {
  Real lb = log(base);
  return exp(CValue(z.re * lb, z.im * lb));
}

CValue pow(const CValue& z, long n) {
  if (n < 0) return inverse(pow(z, -n));
  CValue result(1L, 0L, z.bits());
  CValue b = z;
  while (n > 0) {
    if (n & 1) result *= b;
    n >>= 1;
    if (n) b *= CValue(b);
  }
  return result;
}

CValue inverse(const CValue& z) {
  Real d = norm(z);
  return {z.re / d, -z.im / d};
}

Real max_abs_diff(const CValue& a, const CValue& b) {
  return max(abs(a.re - b.re), abs(a.im - b.im));
}

void require_finite(const CValue& z, const char* where) {
  if (!z.is_finite()) throw Error(ErrorCode::NonFinite, std::string("non-finite value in ") + where);
}

void require_finite(const Real& x, const char* where) {
  if (!x.is_finite()) throw Error(ErrorCode::NonFinite, std::string("non-finite value in ") + where);
}

}  // namespace zetasum
