#include "zetasum/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "zetasum/numkern.hpp"

namespace zetasum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Grid scan and counting only need signs and a rounded integer, so they run
// at a reduced precision regardless of the caller's context.
PrecisionContext scan_context(const PrecisionContext& ctx) {
  return {std::min(ctx.digits, 20), 5};
}

double theta_asymptotic(double t) {
  return t / 2 * std::log(t / kTwoPi) - t / 2 - M_PI / 8 + 1 / (48 * t) + 7 / (5760 * t * t * t);
}

int sign_of(const Real& x) { return x.sign() > 0 ? 1 : (x.sign() < 0 ? -1 : 0); }

struct Node {
  Real t;
  int sign;
};

// One search interval between consecutive grid points, with any subdivision
// points added during escalation.
struct Cell {
  std::vector<Node> nodes;
  long changes() const {
    long c = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i)
      if (nodes[i].sign * nodes[i - 1].sign < 0) ++c;
    return c;
  }
};

Real refine_zero(const Node& a, const Node& b, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  Real lo = at(ctx, a.t), hi = at(ctx, b.t);
  const int s_lo = a.sign;
  const Real tol = pow10(-(ctx.total_digits() - 4), bits) * max(Real(1L, bits), hi);

  // Secant start from a low-precision pair of values.
  Real t = (lo + hi) / 2;
  {
    PrecisionContext low = scan_context(ctx);
    Real za = hardy_Z(at(low, lo), low), zb = hardy_Z(at(low, hi), low);
    Real guess = at(ctx, za) * (hi - lo) / at(ctx, za - zb) + lo;
    if (guess > lo && guess < hi) t = guess;
  }
  for (int iter = 0; iter < 300; ++iter) {
    HardyZJet jet = hardy_Z_jet(t, ctx);
    int s = sign_of(jet.value);
    if (s == 0) return t;
    if (s == s_lo)
      lo = t;
    else
      hi = t;
    Real next(bits);
    bool newton_ok = !jet.derivative.is_zero();
    if (newton_ok) {
      next = t - jet.value / jet.derivative;
      newton_ok = next > lo && next < hi;
    }
    if (!newton_ok) next = (lo + hi) / 2;
    Real step = abs(next - t);
    t = std::move(next);
    if (step < tol || hi - lo < tol) break;
  }
  Real z = hardy_Z(t, ctx);
  if (!(abs(z) < pow10(-(ctx.digits + 2), bits))) {
    throw Error(ErrorCode::PrecisionUnachievable,
                "zero near t=" + t.to_fixed(20) + " did not converge (|Z|=" + abs(z).to_string(5) + ")");
  }
  return t;
}

}  // namespace

std::size_t ZeroTable::count_up_to(const Real& T) const {
  auto it = std::upper_bound(ordinates.begin(), ordinates.end(), T,
                             [](const Real& x, const Real& g) { return x < g; });
  return static_cast<std::size_t>(it - ordinates.begin());
}

std::vector<double> gram_points(double t_lo, double t_hi) {
  std::vector<double> out;
  if (t_hi <= t_lo) return out;
  t_lo = std::max(t_lo, 7.0);  // θ is increasing from 2π on; stay clear of it
  long j = static_cast<long>(std::floor(theta_asymptotic(t_lo) / M_PI)) + 1;
  double g = t_lo;
  for (;; ++j) {
    const double target = j * M_PI;
    for (int i = 0; i < 60; ++i) {
      double d = (theta_asymptotic(g) - target) / (0.5 * std::log(g / kTwoPi));
      g -= d;
      if (std::fabs(d) < 1e-13 * g) break;
    }
    if (g >= t_hi) break;
    if (g > t_lo) out.push_back(g);
  }
  return out;
}

Real zero_count_S(const Real& T, const PrecisionContext& ctx) {
  if (!(T >= 2.0)) throw Error(ErrorCode::InvalidArgument, "zero count needs T >= 2");
  const PrecisionContext low = scan_context(ctx);
  const Bits bits = low.bits();
  const Real t = at(low, T);
  const Real half(0.5, bits);

  // Continuous variation of arg ζ(σ + iT) from σ = 3, where Re ζ > 0.
  Real sigma(3L, bits);
  CValue prev = zeta(CValue(sigma, t), low);
  Real total = arg(prev);
  Real h(0.25, bits);
  const Real min_step(1e-9, bits);
  const Real max_turn(0.4, bits);
  while (sigma > half) {
    Real next = sigma - h;
    if (next < half) next = half;
    CValue cur = zeta(CValue(next, t), low);
    if (cur.re.is_zero() && cur.im.is_zero())
      throw Error(ErrorCode::AmbiguousCount, "ζ vanishes on the counting path at T=" + T.to_fixed(20));
    Real turn = arg(cur / prev);
    if (abs(turn) > max_turn && h > min_step) {
      h /= 2L;
      continue;
    }
    total += turn;
    prev = std::move(cur);
    sigma = std::move(next);
    if (abs(turn) < Real(0.05, bits)) h *= 2L;
    if (h > Real(0.25, bits)) h = Real(0.25, bits);
  }
  if (abs(prev) < pow10(-(low.total_digits() - 5), bits))
    throw Error(ErrorCode::AmbiguousCount, "T=" + T.to_fixed(20) + " is an ordinate");
  return total / Real::pi(bits);
}

long count_zeros_rvm(const Real& T, const PrecisionContext& ctx) {
  const PrecisionContext low = scan_context(ctx);
  const Real S = zero_count_S(T, ctx);
  const Real t = at(low, T);
  Real N = riemann_siegel_theta(t, low) / Real::pi(low.bits()) + 1L + S;
  Real n = floor(N + Real(0.5, low.bits()));
  if (abs(N - n) > 1e-6) {
    throw Error(ErrorCode::AmbiguousCount,
                "zero count at T=" + T.to_fixed(20) + " is not integral: " + N.to_string(12));
  }
  return n.to_long_floor();
}

ZeroTable find_zeros(const Real& t_max, const PrecisionContext& ctx, int threads) {
  if (!(t_max >= 2.0)) throw Error(ErrorCode::InvalidArgument, "find_zeros needs t_max >= 2");
  threads = std::max(1, threads);
  const PrecisionContext low = scan_context(ctx);
  const Bits low_bits = low.bits();

  ZeroTable table;
  table.source = ZeroSource::computed;
  table.precision_digits = ctx.digits;
  table.verified_height = at(ctx, t_max);

  const long expected = count_zeros_rvm(t_max, ctx);
  // Every zero lies above 14; nothing to search below 10.
  const double start = 10.0;
  if (t_max <= start) {
    if (expected != 0) throw Error(ErrorCode::MissedZero, "zero count below 10 is nonzero");
    return table;
  }

  auto node_at = [&](const Real& t) {
    Real z = hardy_Z(t, low);
    if (z.is_zero()) z = hardy_Z(at(ctx, t), ctx);
    return Node{t, sign_of(z)};
  };

  std::vector<Real> grid;
  grid.emplace_back(start, low_bits);
  for (double g : gram_points(start, t_max.to_double())) {
    Real gr(g, low_bits);
    if (gr < t_max) grid.push_back(gr);
  }
  grid.push_back(at(low, t_max));

  std::vector<Node> grid_nodes(grid.size());
  auto eval_range = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < grid.size(); i += stride) grid_nodes[i] = node_at(grid[i]);
  };
  {
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(eval_range, static_cast<std::size_t>(k), threads);
    eval_range(0, static_cast<std::size_t>(threads));
    for (auto& th : pool) th.join();
  }

  std::vector<Cell> cells(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) cells[i].nodes = {grid_nodes[i], grid_nodes[i + 1]};

  auto total_changes = [&] {
    long c = 0;
    for (const auto& cell : cells) c += cell.changes();
    return c;
  };

  long found = total_changes();
  for (int level = 1; found != expected && level <= 6; ++level) {
    // Zeros missed between Gram points sit in cells without a sign change
    // or next to them (Gram's law failures come in such pairs).
    std::vector<bool> pick(cells.size(), false);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (level >= 4 || cells[i].changes() == 0) {
        pick[i] = true;
        if (i > 0) pick[i - 1] = true;
        if (i + 1 < cells.size()) pick[i + 1] = true;
      }
    }
    const long parts = 1L << level;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!pick[i]) continue;
      Cell& cell = cells[i];
      const Real a = cell.nodes.front().t, b = cell.nodes.back().t;
      std::vector<Node> fresh;
      fresh.push_back(cell.nodes.front());
      for (long k = 1; k < parts; ++k) fresh.push_back(node_at(a + (b - a) * k / parts));
      fresh.push_back(cell.nodes.back());
      // Keep earlier subdivision points too; they are still valid samples.
      for (std::size_t k = 1; k + 1 < cell.nodes.size(); ++k) fresh.push_back(cell.nodes[k]);
      std::sort(fresh.begin(), fresh.end(), [](const Node& x, const Node& y) { return x.t < y.t; });
      fresh.erase(std::unique(fresh.begin(), fresh.end(), [](const Node& x, const Node& y) { return x.t == y.t; }),
                  fresh.end());
      cell.nodes = std::move(fresh);
    }
    found = total_changes();
  }
  if (found != expected) {
    throw Error(ErrorCode::MissedZero, "found " + std::to_string(found) + " sign changes below " +
                                           t_max.to_fixed(20) + " but N(T) = " + std::to_string(expected));
  }

  std::vector<std::pair<Node, Node>> brackets;
  for (const auto& cell : cells)
    for (std::size_t k = 1; k < cell.nodes.size(); ++k)
      if (cell.nodes[k].sign * cell.nodes[k - 1].sign < 0) brackets.emplace_back(cell.nodes[k - 1], cell.nodes[k]);

  table.ordinates.assign(brackets.size(), Real(ctx.bits()));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(threads));
  auto refine_range = [&](int w) {
    try {
      for (std::size_t i = static_cast<std::size_t>(w); i < brackets.size(); i += static_cast<std::size_t>(threads))
        table.ordinates[i] = refine_zero(brackets[i].first, brackets[i].second, ctx);
    } catch (...) {
      failures[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  {
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(refine_range, k);
    refine_range(0);
    for (auto& th : pool) th.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return table;
}

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Significant digits of a plain decimal literal, or -1 if it is not one.
int significant_digits(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '+') ++i;
  int digits = 0;
  bool seen_nonzero = false, seen_point = false, any_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_point) return -1;
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      any_digit = true;
      if (c != '0') seen_nonzero = true;
      if (seen_nonzero) ++digits;
    } else {
      return -1;
    }
  }
  return any_digit ? digits : -1;
}

}  // namespace

ZeroTable import_zeros(std::istream& in, const PrecisionContext& ctx, bool trust) {
  ZeroTable table;
  table.source = ZeroSource::imported;
  table.verified_height = Real(ctx.bits());
  bool have_height = false;
  Real declared_height(ctx.bits());
  int min_digits = -1;

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      std::string body = trim(s.substr(1));
      const std::string key = "verified_height:";
      if (body.compare(0, key.size(), key) == 0) {
        try {
          declared_height = Real::parse(trim(body.substr(key.size())), ctx.bits());
        } catch (const Error&) {
          throw Error(ErrorCode::MalformedLine, "bad verified_height comment", line_no);
        }
        have_height = true;
      }
      continue;
    }
    int digits = significant_digits(s);
    if (digits <= 0) throw Error(ErrorCode::MalformedLine, "not a positive decimal ordinate: '" + s + "'", line_no);
    Real g = Real::parse(s, std::max(ctx.bits(), bits_for_digits(digits + 5)));
    g = at(ctx, g);
    if (!table.ordinates.empty() && !(table.ordinates.back() < g))
      throw Error(ErrorCode::NotAscending, "ordinates must be strictly ascending", line_no);
    table.ordinates.push_back(std::move(g));
    min_digits = min_digits < 0 ? digits : std::min(min_digits, digits);
  }
  table.precision_digits = min_digits < 0 ? ctx.digits : min_digits;

  if (have_height)
    table.verified_height = declared_height;
  else if (!table.ordinates.empty())
    table.verified_height = table.ordinates.back();

  if (trust || (table.ordinates.empty() && !have_height)) return table;

  const Real threshold = pow10(-(table.precision_digits - 8), ctx.bits());
  const Real half(0.5, ctx.bits());
  for (const Real& g : table.ordinates) {
    Real z = abs(zeta(CValue(half, g), ctx));
    if (!(z < threshold)) {
      throw Error(ErrorCode::VerificationFailed,
                  "|zeta(1/2+i*" + g.to_fixed(20) + ")| = " + z.to_string(5) + " exceeds " + threshold.to_string(3));
    }
  }
  // The count check needs a height that is not itself an ordinate.
  Real h = table.verified_height;
  if (!have_height) h += Real(1e-6, ctx.bits());
  if (h >= 2.0) {
    long n = count_zeros_rvm(h, ctx);
    if (static_cast<std::size_t>(n) != table.count_up_to(h)) {
      throw Error(ErrorCode::VerificationFailed, "table has " + std::to_string(table.count_up_to(h)) +
                                                     " ordinates up to " + h.to_fixed(20) + " but N(T) = " +
                                                     std::to_string(n));
    }
  }
  return table;
}

void export_zeros(const ZeroTable& table, std::ostream& out) {
  const int digits = table.precision_digits > 0 ? table.precision_digits : 40;
  out << "# zetasum zero table\n";
  out << "# source: " << (table.source == ZeroSource::computed ? "computed" : "imported") << "\n";
  out << "# precision_digits: " << digits << "\n";
  out << "# verified_height: " << table.verified_height.to_fixed(digits) << "\n";
  for (const Real& g : table.ordinates) out << g.to_fixed(digits) << "\n";
}

Real safe_truncation_height(const Real& T, const ZeroTable& table) {
  if (!(T > 1.0)) throw Error(ErrorCode::InvalidArgument, "truncation height needs T > 1");
  const Real T1 = T + 1L;
  if (table.verified_height < T1) {
    throw Error(ErrorCode::InsufficientTable, "zero table verified to " + table.verified_height.to_fixed(20) +
                                                  ", need " + T1.to_fixed(20));
  }
  const Real gap = 1L / (2L * log(T));
  const auto& g = table.ordinates;
  const std::size_t above = table.count_up_to(T);  // index of the first γ > T
  const Real lower = above > 0 ? g[above - 1] : Real(0L, T.bits());
  const Real upper = above < g.size() ? g[above] : table.verified_height;
  const bool near_lower = above > 0 && T - lower <= gap;
  const bool near_upper = above < g.size() && upper - T <= gap;
  if (!near_lower && !near_upper) return T;
  // T lies in [γ_k, γ_{k+1}); the middle of that gap is as far from both
  // ordinates as any height can get.
  return (lower + upper) / 2;
}

}  // namespace zetasum
