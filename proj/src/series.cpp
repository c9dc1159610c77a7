#include "zetasum/series.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>

namespace zetasum {

Series Series::constant(const CValue& a, int order) {
  Series s(order, a.bits());
  s[0] = a;
  return s;
}

Series Series::variable(const CValue& base, int order) {
  Series s(order, base.bits());
  s[0] = base;
  if (order >= 1) s[1] = CValue(1L, 0L, base.bits());
  return s;
}

Series& Series::operator+=(const Series& o) {
  for (int i = 0; i <= order(); ++i) (*this)[i] += o[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (int i = 0; i <= order(); ++i) (*this)[i] -= o[i];
  return *this;
}

Series& Series::operator*=(const CValue& a) {
  for (auto& c : c_) c *= a;
  return *this;
}

Series& Series::operator*=(const Real& a) {
  for (auto& c : c_) c *= a;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int n = a.order();
  Series r(n, a[0].bits());
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series Series::inverse() const {
  const int n = order();
  Series r(n, c_[0].bits());
  CValue inv0 = zetasum::inverse(c_[0]);
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    CValue acc(c_[0].bits());
    for (int j = 1; j <= k; ++j) acc += (*this)[j] * r[k - j];
    r[k] = -(acc * inv0);
  }
  return r;
}

Real Series::max_abs() const {
  Real m(c_[0].bits());
  for (const auto& c : c_) m = max(m, abs(c));
  return m;
}

Series power_series_of_exp(const CValue& scale, const Real& log_base, int order) {
  Series s(order, scale.bits());
  s[0] = scale;
  for (int i = 1; i <= order; ++i) {
    s[i] = s[i - 1] * log_base;
    s[i] = -s[i];
    s[i] /= static_cast<long>(i);
  }
  return s;
}

namespace {

// Exact B_0..B_n (B_1 = +1/2 convention, only even indices are used).
class BernoulliCache {
 public:
  Real over_factorial(int j, Bits bits) {
    std::lock_guard lock(mu_);
    extend(2 * j);
    auto& row = numeric_[bits];
    while (static_cast<int>(row.size()) < j) {
      const int jj = static_cast<int>(row.size()) + 1;
      mpq_class q = exact_[static_cast<std::size_t>(2 * jj)] / factorial_q(2 * jj);
      row.push_back(to_real(q, bits));
    }
    return row[static_cast<std::size_t>(j - 1)];
  }

  Real plain(int j, Bits bits) {
    std::lock_guard lock(mu_);
    extend(2 * j);
    return to_real(exact_[static_cast<std::size_t>(2 * j)], bits);
  }

 private:
  static mpq_class factorial_q(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return mpq_class(f);
  }

  static Real to_real(const mpq_class& q, Bits bits) {
    Real r(bits);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  // Akiyama-Tanigawa, O(n^2) rational updates, incremental.
  void extend(int n) {
    while (static_cast<int>(exact_.size()) <= n) {
      const int m = static_cast<int>(exact_.size());
      work_.emplace_back(1, m + 1);
      work_.back().canonicalize();
      for (int j = m; j >= 1; --j) {
        work_[static_cast<std::size_t>(j - 1)] =
            j * (work_[static_cast<std::size_t>(j - 1)] - work_[static_cast<std::size_t>(j)]);
      }
      exact_.push_back(work_[0]);
    }
  }

  std::mutex mu_;
  std::vector<mpq_class> work_;
  std::vector<mpq_class> exact_;
  std::map<Bits, std::vector<Real>> numeric_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

Real bernoulli_2j_over_factorial(int j, Bits bits) { return bernoulli_cache().over_factorial(j, bits); }

Real bernoulli_2j(int j, Bits bits) { return bernoulli_cache().plain(j, bits); }

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace zetasum
