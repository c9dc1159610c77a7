// zetasum: both sides of Σ ζ^(n)(ρ) X^ρ from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "zetasum/arith.hpp"
#include "zetasum/constants.hpp"
#include "zetasum/expansions.hpp"
#include "zetasum/numkern.hpp"
#include "zetasum/selfcheck.hpp"
#include "zetasum/zeros.hpp"
#include "zetasum/zerosum.hpp"

using namespace zetasum;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  int digits = 40;
  std::string zeros_path;
  bool trust_imported = false;
  bool json = false;
  int threads = 1;
  std::string out_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_digits() {
  const char* env = std::getenv("ZETASUM_DIGITS");
  if (!env || !*env) return 40;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < 15 || v > 10000) throw UsageError("ZETASUM_DIGITS must be an integer >= 15");
  return static_cast<int>(v);
}

// Output goes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Real parse_real(const std::string& s, const PrecisionContext& ctx, const char* what) {
  try {
    return Real::parse(s, ctx.bits());
  } catch (const Error&) {
    throw UsageError(std::string(what) + " must be a decimal number, got '" + s + "'");
  }
}

RationalX parse_x(const std::string& s) {
  try {
    return RationalX::parse(s);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string num(const Real& x, const PrecisionContext& ctx) { return x.to_string(ctx.digits); }

ZeroTable load_zeros(const RunConfig& cfg, const Real& need, const PrecisionContext& ctx) {
  if (cfg.zeros_path.empty()) return find_zeros(need + 1L, ctx, cfg.threads);
  std::ifstream in(cfg.zeros_path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read zero table '" + cfg.zeros_path + "'");
  return import_zeros(in, ctx, cfg.trust_imported);
}

std::vector<Real> parse_grid(const std::string& s, const PrecisionContext& ctx) {
  std::vector<Real> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item, ctx, "--Tgrid entry"));
  if (out.empty()) throw UsageError("--Tgrid is empty");
  return out;
}

void emit_breakdown(const ExpansionBreakdown& b, const RunConfig& cfg, const PrecisionContext& ctx) {
  Sink sink(cfg.out_path);
  auto& os = sink.os();
  if (cfg.json) {
    json j;
    j["meta"] = {{"formula", b.meta.formula}, {"n", b.meta.n},           {"X", b.meta.X},
                 {"T", num(b.meta.T, ctx)},   {"digits", b.meta.digits}, {"error_shape", b.meta.error_shape}};
    if (!b.meta.note.empty()) j["meta"]["note"] = b.meta.note;
    j["terms"] = json::array();
    for (const auto& t : b.terms)
      j["terms"].push_back({{"term", t.label}, {"re", num(t.value.re, ctx)}, {"im", num(t.value.im, ctx)}});
    j["total"] = {{"re", num(b.total.re, ctx)}, {"im", num(b.total.im, ctx)}};
    j["error_scale"] = num(b.error_scale, ctx);
    os << j.dump(2) << "\n";
    return;
  }
  os << "term,re,im\n";
  for (const auto& t : b.terms) os << t.label << "," << num(t.value.re, ctx) << "," << num(t.value.im, ctx) << "\n";
  os << "total," << num(b.total.re, ctx) << "," << num(b.total.im, ctx) << "\n";
  os << "error_scale," << num(b.error_scale, ctx) << ",0\n";
}

ErrorShape parse_shape(const std::string& s) {
  if (s == "rh") return ErrorShape::rh;
  if (s == "unconditional") return ErrorShape::unconditional;
  throw UsageError("--shape must be rh or unconditional");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"zetasum: sums of zeta derivatives over zeta zeros, and their asymptotic expansions"};
  app.fallthrough();
  app.require_subcommand(1);

  int digits_flag = 0;
  app.add_option("--digits", digits_flag, "working precision in decimal digits (default $ZETASUM_DIGITS or 40)")
      ->check(CLI::Range(15, 10000));
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "JSON instead of CSV");
  app.add_option("--out", cfg.out_path, "write output here instead of stdout");

  // zeros
  auto* zeros = app.add_subcommand("zeros", "zero tables");
  zeros->require_subcommand(1);
  std::string t_str;
  auto* zfind = zeros->add_subcommand("find", "locate all ordinates up to T (CSV k,gamma)");
  zfind->add_option("--T", t_str, "height")->required();
  std::string import_path;
  auto* zimport = zeros->add_subcommand("import", "read and verify a zero table");
  zimport->add_option("file", import_path, "one ordinate per line")->required();
  zimport->add_flag("--trust", cfg.trust_imported, "skip verification (unsafe)");
  auto* zexport = zeros->add_subcommand("export", "write a zero table file");
  zexport->add_option("--T", t_str, "height")->required();
  zexport->add_option("--zeros", cfg.zeros_path, "re-export this table instead of computing");
  zexport->add_flag("--trust", cfg.trust_imported, "skip verification of --zeros (unsafe)");

  // constants
  int jmax = 5;
  auto* cconst = app.add_subcommand("constants", "Laurent coefficients C_j, A_j at s = 1");
  cconst->add_option("--jmax", jmax, "largest j")->check(CLI::Range(0, 20));

  // rhs / lhs / compare
  std::string formula, x_str = "1/1", shape_str = "rh", grid_str;
  int n = 1;
  auto* crhs = app.add_subcommand("rhs", "evaluate a right-hand side term by term");
  crhs->add_option("--formula", formula, "theorem1|explicit2|integer|general-sc|fujii2|fujii4|landau|s-asym")
      ->required();
  crhs->add_option("--n", n, "derivative order (k for s-asym)")->check(CLI::NonNegativeNumber);
  crhs->add_option("--X", x_str, "X as p/q or decimal");
  crhs->add_option("--T", t_str, "height")->required();
  crhs->add_option("--shape", shape_str, "error envelope: rh|unconditional");

  auto* clhs = app.add_subcommand("lhs", "sum over zeros of zeta^(n)(rho) X^rho");
  clhs->add_option("--n", n, "derivative order")->check(CLI::NonNegativeNumber);
  clhs->add_option("--X", x_str, "X as p/q or decimal");
  clhs->add_option("--T", t_str, "height")->required();
  clhs->add_option("--zeros", cfg.zeros_path, "zero table file (computed if absent)");
  clhs->add_flag("--trust", cfg.trust_imported, "skip verification of --zeros (unsafe)");

  auto* ccmp = app.add_subcommand("compare", "residuals lhs - rhs over a grid of heights");
  ccmp->add_option("--n", n, "derivative order")->check(CLI::NonNegativeNumber);
  ccmp->add_option("--X", x_str, "X as p/q or decimal");
  ccmp->add_option("--Tgrid", grid_str, "comma-separated ascending heights")->required();
  ccmp->add_option("--formula", formula, "right-hand side to compare against")->required();
  ccmp->add_option("--zeros", cfg.zeros_path, "zero table file (computed if absent)");
  ccmp->add_flag("--trust", cfg.trust_imported, "skip verification of --zeros (unsafe)");
  ccmp->add_option("--shape", shape_str, "error envelope: rh|unconditional");

  auto* cself = app.add_subcommand("selfcheck", "run the identity suite");

  try {
    app.parse(argc, argv);
    cfg.digits = digits_flag ? digits_flag : default_digits();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "zetasum: " << e.what() << "\n";
    return 2;
  }

  try {
    const PrecisionContext ctx(cfg.digits);

    if (zfind->parsed()) {
      Real T = parse_real(t_str, ctx, "--T");
      ZeroTable table = find_zeros(T, ctx, cfg.threads);
      Sink sink(cfg.out_path);
      if (cfg.json) {
        json j;
        j["meta"] = {{"verified_height", num(table.verified_height, ctx)}, {"digits", ctx.digits},
                     {"count", table.size()}};
        j["ordinates"] = json::array();
        for (const Real& g : table.ordinates) j["ordinates"].push_back(g.to_fixed(ctx.digits));
        sink.os() << j.dump(2) << "\n";
      } else {
        sink.os() << "k,gamma\n";
        for (std::size_t k = 0; k < table.size(); ++k)
          sink.os() << k + 1 << "," << table.ordinates[k].to_fixed(ctx.digits) << "\n";
      }
    } else if (zimport->parsed()) {
      std::ifstream in(import_path);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + import_path + "'");
      ZeroTable table = import_zeros(in, ctx, cfg.trust_imported);
      Sink sink(cfg.out_path);
      if (cfg.json) {
        json j = {{"count", table.size()},
                  {"verified_height", table.verified_height.to_fixed(ctx.digits)},
                  {"precision_digits", table.precision_digits},
                  {"verified", !cfg.trust_imported}};
        sink.os() << j.dump(2) << "\n";
      } else {
        sink.os() << "count,verified_height,precision_digits,verified\n"
                  << table.size() << "," << table.verified_height.to_fixed(ctx.digits) << ","
                  << table.precision_digits << "," << (cfg.trust_imported ? "no" : "yes") << "\n";
      }
    } else if (zexport->parsed()) {
      Real T = parse_real(t_str, ctx, "--T");
      ZeroTable table;
      if (cfg.zeros_path.empty()) {
        table = find_zeros(T, ctx, cfg.threads);
      } else {
        std::ifstream in(cfg.zeros_path);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + cfg.zeros_path + "'");
        table = import_zeros(in, ctx, cfg.trust_imported);
        table.ordinates.resize(table.count_up_to(T));
        if (T < table.verified_height) table.verified_height = T;
      }
      Sink sink(cfg.out_path);
      export_zeros(table, sink.os());
    } else if (cconst->parsed()) {
      const LaurentTable& t = laurent_table(jmax, ctx);
      Sink sink(cfg.out_path);
      if (cfg.json) {
        json j = json::array();
        for (int k = 0; k <= jmax; ++k)
          j.push_back({{"j", k}, {"C_j", num(t.C[k], ctx)}, {"A_j", num(t.A[k], ctx)}});
        sink.os() << j.dump(2) << "\n";
      } else {
        sink.os() << "j,C_j,A_j\n";
        for (int k = 0; k <= jmax; ++k) sink.os() << k << "," << num(t.C[k], ctx) << "," << num(t.A[k], ctx) << "\n";
      }
    } else if (crhs->parsed()) {
      if (!is_known_formula(formula)) throw UsageError("unknown --formula '" + formula + "'");
      RationalX X = parse_x(x_str);
      Real T = parse_real(t_str, ctx, "--T");
      emit_breakdown(evaluate_rhs(formula, n, X, T, ctx, parse_shape(shape_str)), cfg, ctx);
    } else if (clhs->parsed()) {
      RationalX X = parse_x(x_str);
      Real T = parse_real(t_str, ctx, "--T");
      ZeroTable table = load_zeros(cfg, T, ctx);
      Real Te = safe_truncation_height(T, table);
      CValue v = lhs_zero_sum(n, X, Te, table, ctx, cfg.threads);
      Sink sink(cfg.out_path);
      if (cfg.json) {
        json j = {{"T_effective", num(Te, ctx)},
                  {"zero_count", table.count_up_to(Te)},
                  {"lhs_re", num(v.re, ctx)},
                  {"lhs_im", num(v.im, ctx)}};
        sink.os() << j.dump(2) << "\n";
      } else {
        sink.os() << "T_effective,zero_count,lhs_re,lhs_im\n"
                  << num(Te, ctx) << "," << table.count_up_to(Te) << "," << num(v.re, ctx) << "," << num(v.im, ctx)
                  << "\n";
      }
    } else if (ccmp->parsed()) {
      if (!is_known_formula(formula)) throw UsageError("unknown --formula '" + formula + "'");
      RationalX X = parse_x(x_str);
      std::vector<Real> grid = parse_grid(grid_str, ctx);
      Real top = grid.front();
      for (const Real& g : grid) top = max(top, g);
      ZeroTable table = load_zeros(cfg, top, ctx);
      Comparison c = compare(n, X, grid, formula, table, ctx, cfg.threads, parse_shape(shape_str));
      Sink sink(cfg.out_path);
      if (cfg.json) {
        json j;
        j["meta"] = {{"n", n}, {"X", X.to_string()}, {"formula", formula}, {"digits", ctx.digits}};
        j["rows"] = json::array();
        for (const auto& r : c.reports)
          j["rows"].push_back({{"T_effective", num(r.meta.T_effective, ctx)},
                               {"zero_count", r.meta.zero_count},
                               {"lhs_re", num(r.lhs.re, ctx)},
                               {"lhs_im", num(r.lhs.im, ctx)},
                               {"rhs_re", num(r.rhs.re, ctx)},
                               {"rhs_im", num(r.rhs.im, ctx)},
                               {"resid_abs", num(abs(r.residual), ctx)},
                               {"resid_norm", num(r.normalized_residual, ctx)}});
        j["summary"] = {{"c_hat", num(c.c_hat, ctx)}, {"growth", num(c.growth, ctx)},
                        {"nonincreasing", c.nonincreasing}};
        sink.os() << j.dump(2) << "\n";
      } else {
        sink.os() << "T_effective,zero_count,lhs_re,lhs_im,rhs_re,rhs_im,resid_abs,resid_norm\n";
        for (const auto& r : c.reports)
          sink.os() << num(r.meta.T_effective, ctx) << "," << r.meta.zero_count << "," << num(r.lhs.re, ctx) << ","
                    << num(r.lhs.im, ctx) << "," << num(r.rhs.re, ctx) << "," << num(r.rhs.im, ctx) << ","
                    << num(abs(r.residual), ctx) << "," << num(r.normalized_residual, ctx) << "\n";
        std::cerr << "c_hat=" << c.c_hat.to_string(6) << " growth=" << c.growth.to_string(6)
                  << " nonincreasing=" << (c.nonincreasing ? "yes" : "no") << "\n";
      }
    } else if (cself->parsed()) {
      bool all = true;
      for (const auto& r : run_identity_suite(ctx)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  (worst " << r.worst << ", limit " << r.limit
                  << ")\n";
        all = all && r.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "zetasum: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "zetasum: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "zetasum: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
