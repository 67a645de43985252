#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "btq/action.hpp"
#include "btq/bs.hpp"
#include "btq/cli.hpp"
#include "btq/compare.hpp"
#include "btq/error.hpp"
#include "btq/spectra.hpp"
#include "btq/symbol.hpp"

namespace py = pybind11;
using namespace btq;

namespace {

ActionOptions action_options(double tol, double radius_scale) {
  ActionOptions opts;
  opts.tol = tol;
  opts.radius_scale = radius_scale;
  return opts;
}

py::dict solution_dict(const BSSolution& s) {
  py::dict d;
  d["j"] = s.j;
  d["variant"] = std::string(to_string(s.variant));
  d["lambda"] = s.lambda;
  d["iterations"] = s.iterations;
  d["final_residual"] = s.final_residual;
  d["k"] = s.k;
  d["eps"] = s.eps;
  d["outside_window"] = s.outside_window;
  d["status"] = s.failure ? std::string(to_string(*s.failure)) : std::string("ok");
  return d;
}

py::dict report_dict(const ComparisonReport& r) {
  py::list pairs;
  for (const auto& p : r.pairs) pairs.append(py::make_tuple(p.exact, p.approx, p.distance));
  py::list solutions;
  for (const auto& s : r.bs_solutions) solutions.append(solution_dict(s));
  py::dict d;
  d["k"] = r.k;
  d["eps"] = r.eps;
  d["variant"] = std::string(to_string(r.variant));
  d["window"] = r.window;
  d["max_error"] = r.max_error;
  d["mean_error"] = r.mean_error;
  d["exact_count_in_window"] = r.exact_count_in_window;
  d["bs_count_in_window"] = r.bs_count_in_window;
  d["pairs"] = pairs;
  d["exact_spectrum"] = r.exact_spectrum;
  d["bs_solutions"] = solutions;
  return d;
}

}  // namespace

PYBIND11_MODULE(_btq, m) {
  m.doc() = "Berezin-Toeplitz spectra and complex Bohr-Sommerfeld rules on the sphere";

  py::exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("btq._btq").attr("Error");
      py::object instance = type(e.what());
      instance.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  m.def(
      "operator_matrix",
      [](const std::string& family, int k, double eps) {
        return operator_matrix(parse_operator_family(family), k, eps).entries;
      },
      py::arg("family"), py::arg("k"), py::arg("eps") = 0.0,
      "Matrix of T, S or the ladder operator in the orthonormal monomial basis.");

  m.def(
      "toeplitz_matrix",
      [](const std::string& symbol, int k) {
        return toeplitz_matrix(build_symbol(parse_symbol_name(symbol)), k).entries;
      },
      py::arg("symbol"), py::arg("k"), "Covariant Toeplitz matrix of x3, x1sq, ladder or one.");

  m.def(
      "toeplitz_quadrature_oracle",
      [](const std::string& symbol, int k) {
        return toeplitz_quadrature_oracle(build_symbol(parse_symbol_name(symbol)), k).entries;
      },
      py::arg("symbol"), py::arg("k"), "The same matrix by direct numerical integration.");

  m.def(
      "eigenvalues",
      [](const std::string& family, int k, double eps) {
        return eigenvalues(operator_matrix(parse_operator_family(family), k, eps)).eigenvalues;
      },
      py::arg("family"), py::arg("k"), py::arg("eps") = 0.0,
      "Eigenvalues of an operator family, sorted by real then imaginary part.");

  m.def(
      "matrix_eigenvalues", [](const CMatrix& mat) { return eigenvalues(mat); }, py::arg("matrix"));

  m.def(
      "resolvent_norm", [](const CMatrix& mat, cplx lambda) { return resolvent_norm(mat, lambda); },
      py::arg("matrix"), py::arg("lam"));

  m.def(
      "power_norm", [](const CMatrix& mat, int p) { return power_norm(mat, p); }, py::arg("matrix"),
      py::arg("p"));

  m.def(
      "action_integral",
      [](cplx lambda, double eps, double tol, double radius_scale) {
        const auto r = action_integral(lambda, eps, action_options(tol, radius_scale));
        py::dict d;
        d["value"] = r.value;
        d["nodes_used"] = r.nodes_used;
        d["last_delta"] = r.last_delta;
        d["contour_radius"] = r.contour_radius;
        return d;
      },
      py::arg("lam"), py::arg("eps") = 0.0, py::arg("tol") = 1e-12, py::arg("radius_scale") = 1.0);

  m.def(
      "action_derivative",
      [](cplx lambda, double eps) { return action_derivative(lambda, eps); }, py::arg("lam"),
      py::arg("eps") = 0.0);

  m.def(
      "bs_solve",
      [](int k, double eps, int j, const std::string& variant) {
        return solution_dict(bs_solve(k, eps, j, parse_variant(variant)));
      },
      py::arg("k"), py::arg("eps"), py::arg("j"), py::arg("variant") = "principal");

  m.def(
      "bs_spectrum",
      [](int k, double eps, const std::string& variant, double window) {
        py::list out;
        for (const auto& s : bs_spectrum(k, eps, parse_variant(variant), window)) {
          out.append(solution_dict(s));
        }
        return out;
      },
      py::arg("k"), py::arg("eps"), py::arg("variant") = "principal", py::arg("window") = 0.8);

  m.def(
      "match_spectra",
      [](const std::vector<cplx>& exact, const std::vector<cplx>& approx) {
        return report_dict(match_spectra(exact, approx));
      },
      py::arg("exact"), py::arg("approx"));

  m.def(
      "compare_spectra",
      [](int k, double eps, const std::string& variant, double window) {
        return report_dict(compare_spectra(k, eps, parse_variant(variant), window));
      },
      py::arg("k"), py::arg("eps"), py::arg("variant") = "principal", py::arg("window") = 0.8);

  m.def(
      "convergence_study",
      [](const std::vector<int>& ks, double eps, const std::string& variant, double window) {
        ConvergenceStudy study;
        {
          py::gil_scoped_release release;
          study = convergence_study(ks, eps, parse_variant(variant), window);
        }
        py::list table;
        for (const auto& row : study.table) table.append(py::make_tuple(row.k, row.max_error));
        py::dict d;
        d["table"] = table;
        d["slope"] = study.slope;
        return d;
      },
      py::arg("ks"), py::arg("eps"), py::arg("variant") = "principal", py::arg("window") = 0.8);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "btq");
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (status, stdout, stderr).");
}
