#pragma once

// Extended-precision real and complex values on top of MPFR.
//
// Every Real owns its own precision. Binary operations produce a result at
// the larger of the operand precisions, so a call tree that starts from
// values created at one PrecisionContext stays at that precision.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "zetasum/error.hpp"

namespace zetasum {

using Bits = mpfr_prec_t;

/// Working precision for a call tree.
struct PrecisionContext {
  int digits = 40;       // significant decimal digits promised to the caller
  int guard_digits = 10;  // extra digits carried internally

  PrecisionContext() = default;
  PrecisionContext(int d, int g = 10);

  int total_digits() const noexcept { return digits + guard_digits; }
  Bits bits() const noexcept;
  /// 10^-(digits+guard): the internal resolution.
  double log10_eps() const noexcept { return -static_cast<double>(total_digits()); }
  /// Same context with `extra` more digits of guard.
  PrecisionContext widened(int extra) const { return {digits, guard_digits + extra}; }
};

Bits bits_for_digits(int digits) noexcept;

class Real {
 public:
  Real() : Real(Bits{64}) {}
  explicit Real(Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(int x, Bits bits) : Real(static_cast<long>(x), bits) {}
  Real(double x, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  /// Parses a decimal (or scientific) literal; throws InvalidArgument.
  static Real parse(std::string_view text, Bits bits);
  static Real pi(Bits bits);
  static Real log2(Bits bits);
  static Real euler_gamma(Bits bits);

  Bits bits() const noexcept { return mpfr_get_prec(v_); }
  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent2() const noexcept;
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const;
  /// Scientific notation with `sig` significant digits, '.' separator.
  std::string to_string(int sig) const;
  /// Plain positional notation with `sig` significant digits.
  std::string to_fixed(int sig) const;

  Real operator-() const {
    Real r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.bits(), b.bits()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.bits(), b.bits()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.bits(), b.bits()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.bits(), b.bits()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator+(long b, Real a) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.bits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator*(long b, Real a) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator/(long a, const Real& b) {
    Real r(b.bits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real atan2(const Real& y, const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real floor(const Real& x);
/// x * 2^e
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
/// 10^e at the given precision.
Real pow10(long e, Bits bits);

// ---------------------------------------------------------------------------

/// Complex value with extended-precision components.
struct CValue {
  Real re;
  Real im;

  CValue() = default;
  explicit CValue(Bits bits) : re(bits), im(bits) {}
  CValue(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit CValue(Real r) : re(std::move(r)), im(re.bits()) {}
  CValue(long r, long i, Bits bits) : re(r, bits), im(i, bits) {}
  CValue(int r, int i, Bits bits) : re(r, bits), im(i, bits) {}
  CValue(double r, double i, Bits bits) : re(r, bits), im(i, bits) {}

  Bits bits() const noexcept { return std::max(re.bits(), im.bits()); }
  bool is_finite() const noexcept { return re.is_finite() && im.is_finite(); }

  CValue operator-() const { return {-re, -im}; }
  CValue& operator+=(const CValue& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CValue& operator-=(const CValue& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CValue& operator*=(const CValue& o);
  CValue& operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
  }
  CValue& operator*=(long o) {
    re *= o;
    im *= o;
    return *this;
  }
  CValue& operator/=(const Real& o) {
    re /= o;
    im /= o;
    return *this;
  }
  CValue& operator/=(long o) {
    re /= o;
    im /= o;
    return *this;
  }

  friend CValue operator+(CValue a, const CValue& b) { return a += b; }
  friend CValue operator-(CValue a, const CValue& b) { return a -= b; }
  friend CValue operator*(const CValue& a, const CValue& b);
  friend CValue operator/(const CValue& a, const CValue& b);
  friend CValue operator+(CValue a, const Real& b) {
    a.re += b;
    return a;
  }
  friend CValue operator-(CValue a, const Real& b) {
    a.re -= b;
    return a;
  }
  friend CValue operator+(CValue a, long b) {
    a.re += b;
    return a;
  }
  friend CValue operator-(CValue a, long b) {
    a.re -= b;
    return a;
  }
  friend CValue operator-(long a, const CValue& b) { return {a - b.re, -b.im}; }
  friend CValue operator*(CValue a, const Real& b) { return a *= b; }
  friend CValue operator*(const Real& b, CValue a) { return a *= b; }
  friend CValue operator*(CValue a, long b) { return a *= b; }
  friend CValue operator*(long b, CValue a) { return a *= b; }
  friend CValue operator/(CValue a, const Real& b) { return a /= b; }
  friend CValue operator/(CValue a, long b) { return a /= b; }
};

CValue conj(const CValue& z);
Real abs(const CValue& z);
Real norm(const CValue& z);
Real arg(const CValue& z);
CValue exp(const CValue& z);
/// Principal branch.
CValue log(const CValue& z);
CValue sin(const CValue& z);
CValue cos(const CValue& z);
/// e^{i x}
CValue expi(const Real& x);
/// base^z for real base > 0.
CValue pow(const Real& base, const CValue& z);
CValue pow(const CValue& z, long n);
CValue inverse(const CValue& z);
/// Largest |component| difference, a cheap metric for tests.
Real max_abs_diff(const CValue& a, const CValue& b);

/// Throws NonFinite naming `where` if z has a NaN/inf component.
void require_finite(const CValue& z, const char* where);
void require_finite(const Real& x, const char* where);

}  // namespace zetasum
