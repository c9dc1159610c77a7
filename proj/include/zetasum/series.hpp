#pragma once

#include <vector>

#include "zetasum/real.hpp"

namespace zetasum {

/// Truncated Taylor expansion c[0] + c[1] e + ... + c[order] e^order about a
/// fixed base point. Used to carry derivatives through Euler-Maclaurin.
class Series {
 public:
  Series(int order, Bits bits) : c_(static_cast<std::size_t>(order) + 1, CValue(bits)) {}

  static Series constant(const CValue& a, int order);
  /// base + e
  static Series variable(const CValue& base, int order);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  CValue& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const CValue& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<CValue>& coefficients() const noexcept { return c_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const CValue& a);
  Series& operator*=(const Real& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator+(Series a, const Series& b) { return a += b; }

  /// 1 / this; requires c[0] != 0.
  Series inverse() const;
  /// Largest |c[i]| over all coefficients.
  Real max_abs() const;

 private:
  std::vector<CValue> c_;
};

/// Taylor coefficients of base^{-e}, i.e. (-log base)^i / i!, times `scale`.
Series power_series_of_exp(const CValue& scale, const Real& log_base, int order);

/// B_{2j}/(2j)! at the requested precision (j >= 1).
Real bernoulli_2j_over_factorial(int j, Bits bits);
/// B_{2j} at the requested precision (j >= 1).
Real bernoulli_2j(int j, Bits bits);

/// Binomial coefficient as a double-free exact integer (n <= 60).
long long binomial(int n, int k);
long long factorial(int n);

}  // namespace zetasum
