// Python bindings. Numbers cross the boundary as decimal strings so no
// precision is lost; the package wrapper turns them into mpmath values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zetasum/constants.hpp"
#include "zetasum/expansions.hpp"
#include "zetasum/numkern.hpp"
#include "zetasum/selfcheck.hpp"
#include "zetasum/zeros.hpp"
#include "zetasum/zerosum.hpp"

namespace py = pybind11;
using namespace zetasum;

namespace {

using Pair = std::pair<std::string, std::string>;

Pair pair_of(const CValue& z, int digits) { return {z.re.to_string(digits), z.im.to_string(digits)}; }

Real real_of(const std::string& s, const PrecisionContext& ctx) { return Real::parse(s, ctx.bits()); }

ZeroTable table_from(const std::vector<std::string>& ordinates, const std::string& verified_height,
                     const PrecisionContext& ctx, bool trust) {
  std::ostringstream os;
  if (!verified_height.empty()) os << "# verified_height: " << verified_height << "\n";
  for (const auto& g : ordinates) os << g << "\n";
  std::istringstream is(os.str());
  return import_zeros(is, ctx, trust);
}

py::dict breakdown_dict(const ExpansionBreakdown& b, int digits) {
  py::list terms;
  for (const auto& t : b.terms) terms.append(py::make_tuple(t.label, pair_of(t.value, digits)));
  py::dict d;
  d["terms"] = terms;
  d["total"] = pair_of(b.total, digits);
  d["error_scale"] = b.error_scale.to_string(digits);
  d["formula"] = b.meta.formula;
  d["note"] = b.meta.note;
  return d;
}

ErrorShape shape_of(const std::string& s) {
  if (s == "rh") return ErrorShape::rh;
  if (s == "unconditional") return ErrorShape::unconditional;
  throw Error(ErrorCode::InvalidArgument, "shape must be 'rh' or 'unconditional'");
}

}  // namespace

PYBIND11_MODULE(_zetasum, m) {
  m.doc() = "zeta derivatives summed over zeta zeros, and their expansions";

  static py::exception<Error> exc(m, "ZetasumError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def(
      "zeta",
      [](const std::string& sigma, const std::string& t, int n, int digits) {
        PrecisionContext ctx(digits);
        CValue s = make_s(ctx, sigma, t);
        return pair_of(n == 0 ? zeta(s, ctx) : zeta_derivative(n, s, ctx), digits);
      },
      py::arg("sigma"), py::arg("t"), py::arg("n") = 0, py::arg("digits") = 40);

  m.def(
      "hardy_z",
      [](const std::string& t, int digits) {
        PrecisionContext ctx(digits);
        return hardy_Z(real_of(t, ctx), ctx).to_string(digits);
      },
      py::arg("t"), py::arg("digits") = 40);

  m.def(
      "find_zeros",
      [](const std::string& t_max, int digits, int threads) {
        PrecisionContext ctx(digits);
        ZeroTable t;
        {
          py::gil_scoped_release release;
          t = find_zeros(real_of(t_max, ctx), ctx, threads);
        }
        std::vector<std::string> out;
        for (const auto& g : t.ordinates) out.push_back(g.to_fixed(digits));
        return out;
      },
      py::arg("t_max"), py::arg("digits") = 40, py::arg("threads") = 1);

  m.def(
      "count_zeros",
      [](const std::string& T, int digits) {
        PrecisionContext ctx(digits);
        return count_zeros_rvm(real_of(T, ctx), ctx);
      },
      py::arg("T"), py::arg("digits") = 40);

  m.def(
      "laurent_constants",
      [](int j_max, int digits) {
        PrecisionContext ctx(digits);
        const LaurentTable& t = laurent_table(j_max, ctx);
        std::vector<Pair> out;
        for (int j = 0; j <= j_max; ++j) out.emplace_back(t.C[j].to_string(digits), t.A[j].to_string(digits));
        return out;
      },
      py::arg("j_max"), py::arg("digits") = 40);

  m.def(
      "rhs",
      [](const std::string& formula, int n, const std::string& X, const std::string& T, int digits,
         const std::string& shape) {
        PrecisionContext ctx(digits);
        return breakdown_dict(evaluate_rhs(formula, n, RationalX::parse(X), real_of(T, ctx), ctx, shape_of(shape)),
                              digits);
      },
      py::arg("formula"), py::arg("n"), py::arg("X"), py::arg("T"), py::arg("digits") = 40,
      py::arg("shape") = "rh");

  m.def(
      "lhs",
      [](int n, const std::string& X, const std::string& T, const std::vector<std::string>& ordinates,
         const std::string& verified_height, int digits, bool trust, int threads) {
        PrecisionContext ctx(digits);
        ZeroTable table = table_from(ordinates, verified_height, ctx, trust);
        py::gil_scoped_release release;
        return pair_of(lhs_zero_sum(n, RationalX::parse(X), real_of(T, ctx), table, ctx, threads), digits);
      },
      py::arg("n"), py::arg("X"), py::arg("T"), py::arg("ordinates"), py::arg("verified_height") = "",
      py::arg("digits") = 40, py::arg("trust") = false, py::arg("threads") = 1);

  m.def(
      "compare",
      [](int n, const std::string& X, const std::vector<std::string>& T_grid, const std::string& formula,
         const std::vector<std::string>& ordinates, const std::string& verified_height, int digits, bool trust) {
        PrecisionContext ctx(digits);
        ZeroTable table = table_from(ordinates, verified_height, ctx, trust);
        std::vector<Real> grid;
        for (const auto& s : T_grid) grid.push_back(real_of(s, ctx));
        Comparison c = compare(n, RationalX::parse(X), grid, formula, table, ctx);
        py::list rows;
        for (const auto& r : c.reports) {
          py::dict d;
          d["T_effective"] = r.meta.T_effective.to_string(digits);
          d["zero_count"] = r.meta.zero_count;
          d["lhs"] = pair_of(r.lhs, digits);
          d["rhs"] = pair_of(r.rhs, digits);
          d["normalized_residual"] = r.normalized_residual.to_string(digits);
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["c_hat"] = c.c_hat.to_string(digits);
        out["growth"] = c.growth.to_string(digits);
        out["nonincreasing"] = c.nonincreasing;
        return out;
      },
      py::arg("n"), py::arg("X"), py::arg("T_grid"), py::arg("formula"), py::arg("ordinates"),
      py::arg("verified_height") = "", py::arg("digits") = 40, py::arg("trust") = false);

  m.def(
      "selfcheck",
      [](int digits) {
        std::vector<std::tuple<std::string, bool, double, double>> out;
        for (const auto& r : run_identity_suite(PrecisionContext(digits)))
          out.emplace_back(r.name, r.pass, r.worst, r.limit);
        return out;
      },
      py::arg("digits") = 40);
}
