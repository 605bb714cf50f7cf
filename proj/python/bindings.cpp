#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "agmpi/agm.hpp"
#include "agmpi/cli.hpp"
#include "agmpi/elemfn.hpp"
#include "agmpi/tables.hpp"
#include "agmpi/theta.hpp"
#include "agmpi/verify.hpp"

namespace py = pybind11;
using namespace agmpi;

namespace {

LogMethod log_method(const std::string& name) {
  if (name == "auto") return LogMethod::automatic;
  if (name == "salamin") return LogMethod::salamin;
  if (name == "sasaki_kanada") return LogMethod::sasaki_kanada;
  if (name == "taylor") return LogMethod::taylor_near_one;
  throw DomainError("unknown log method '" + name + "'");
}

// Values cross the boundary as decimal strings; a double would throw away
// everything this library is for.
template <typename F>
auto unary(F f) {
  return [f](const std::string& x, long digits) {
    const Precision p = Precision::from_digits(digits);
    return to_decimal(f(from_decimal(x, p)), digits);
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "AGM-based pi and elementary functions";

  m.def(
      "pi",
      [](long digits, const std::string& algo, std::optional<int> iters) {
        const auto a = parse_pi_algo(algo);
        if (!a) throw DomainError("unknown algorithm '" + algo + "'");
        py::gil_scoped_release release;
        return to_decimal(
            compute_pi(*a, Precision::from_digits(digits), iters).value,
            digits);
      },
      py::arg("digits"), py::arg("algo") = "gl", py::arg("iters") = py::none(),
      "pi truncated to `digits` significant digits.");

  m.def(
      "log",
      [](const std::string& x, long digits, const std::string& method) {
        const Precision p = Precision::from_digits(digits);
        return to_decimal(log(from_decimal(x, p), log_method(method)), digits);
      },
      py::arg("x"), py::arg("digits"), py::arg("method") = "auto");
  m.def("exp", unary([](const Real& x) { return exp(x); }), py::arg("x"),
        py::arg("digits"));
  m.def("atan", unary([](const Real& x) { return arctan(x); }), py::arg("x"),
        py::arg("digits"));
  m.def("acos", unary([](const Real& x) { return arccos(x); }), py::arg("x"),
        py::arg("digits"));
  m.def("elliptic_k", unary([](const Real& k) { return elliptic_k(k); }),
        py::arg("k"), py::arg("digits"));
  m.def("elliptic_e", unary([](const Real& k) { return elliptic_e(k); }),
        py::arg("k"), py::arg("digits"));
  m.def("nome", unary([](const Real& k) { return nome(k); }), py::arg("k"),
        py::arg("digits"));
  m.def("theta3", unary([](const Real& q) { return theta3(q); }), py::arg("q"),
        py::arg("digits"));
  m.def(
      "agm",
      [](const std::string& a, const std::string& b, long digits) {
        const Precision p = Precision::from_digits(digits);
        return to_decimal(agm(from_decimal(a, p), from_decimal(b, p)).limit,
                          digits);
      },
      py::arg("a"), py::arg("b"), py::arg("digits"));

  m.def(
      "table",
      [](const std::string& id, std::optional<int> rows,
         std::optional<long> digits, const std::string& format) {
        const auto t = parse_table_id(id);
        if (!t) throw DomainError("unknown table '" + id + "'");
        if (format != "text" && format != "csv") {
          throw DomainError("format must be text or csv");
        }
        const TableSpec spec{*t, rows.value_or(default_rows(*t)),
                             digits.value_or(default_digits(*t)),
                             format == "csv" ? TableFormat::csv
                                             : TableFormat::text};
        py::gil_scoped_release release;
        return render_table(build_table(spec), spec.format);
      },
      py::arg("id"), py::arg("rows") = py::none(),
      py::arg("digits") = py::none(), py::arg("format") = "text");

  m.def(
      "verify",
      [](const std::string& suite, long digits) {
        const auto s = parse_suite(suite);
        if (!s) throw DomainError("unknown suite '" + suite + "'");
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(*s, digits);
        }
        py::list checks;
        for (const CheckResult& c : report.checks) {
          checks.append(py::make_tuple(c.name, c.passed, c.residual,
                                       c.tolerance));
        }
        return checks;
      },
      py::arg("suite") = "all", py::arg("digits") = 100,
      "List of (name, passed, measured, tolerance).");

  m.def(
      "main",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the agm-pi front end; returns (code, out, err).");
}
