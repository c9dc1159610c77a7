#pragma once

// Arithmetic pieces of the explicit formulas: Λ, Δ, the divisor sum over
// mr = X and the exponential sums over m <= Y and mr <= Y.

#include <cstdint>
#include <string>
#include <string_view>

#include "zetasum/real.hpp"

namespace zetasum {

/// Positive rational X = num/den in lowest terms.
struct RationalX {
  enum class Exactness { exact, approximated };

  std::uint64_t num = 1;
  std::uint64_t den = 1;
  Exactness exactness = Exactness::exact;

  RationalX() = default;
  RationalX(std::uint64_t p, std::uint64_t q, Exactness e = Exactness::exact);

  /// "p/q", "p", or a plain decimal such as "2.5" (read as 5/2 exactly).
  static RationalX parse(std::string_view text);
  /// Best rational approximation with den <= max_den, marked approximated.
  static RationalX approximate(double x, std::uint64_t max_den = 1000000);

  bool is_integer() const noexcept { return den == 1; }
  Real value(Bits bits) const;
  std::string to_string() const;
};

/// Smallest prime factor of m (m >= 2); m itself when prime.
std::uint64_t smallest_prime_factor(std::uint64_t m);
/// p if m = p^k with k >= 1, else 0.
std::uint64_t prime_power_base(std::uint64_t m);

Real von_mangoldt(std::uint64_t m, const PrecisionContext& ctx);

/// 1 if X is a positive integer, 0 otherwise; InexactX for approximated X.
int delta_indicator(const RationalX& X);

/// Σ_{mr=X} Λ(r) log^n m; zero unless X is an integer.
Real conv_sum_at_X(int n, const RationalX& X, const PrecisionContext& ctx);

/// Σ_{m<=Y} e^{2πimX}
CValue exp_sum(const RationalX& X, const Real& Y, const PrecisionContext& ctx);
/// Σ_{m<=Y} e^{2πimX} log m
CValue exp_log_sum(const RationalX& X, const Real& Y, const PrecisionContext& ctx);
/// Σ_{mr<=Y} e^{2πimrX} Λ(r) log^n(rX)
CValue mangoldt_exp_sum(int n, const RationalX& X, const Real& Y, const PrecisionContext& ctx);
/// Σ_{mr<=Y} e^{2πimrX} Λ(r) log^k r
CValue mangoldt_exp_sum_powers(int k, const RationalX& X, const Real& Y, const PrecisionContext& ctx);
/// Σ_{mr<=Y} Λ(r) log^k r
Real s_direct(int k, const Real& Y, const PrecisionContext& ctx);

}  // namespace zetasum
