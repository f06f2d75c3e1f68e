// Python bindings for the core operations: function construction, the
// proportional Hadamard / Riemann-Liouville operators, the closed-form image,
// and one inequality checker as a harness entry point.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hadfrac/harness.hpp"
#include "hadfrac/identity.hpp"
#include "hadfrac/operators.hpp"

namespace py = pybind11;
using namespace hadfrac;

PYBIND11_MODULE(_hadfrac, m) {
  m.doc() = "Generalized proportional Hadamard fractional integral operators";

  py::class_<OperatorValue>(m, "OperatorValue")
      .def_readonly("value", &OperatorValue::value)
      .def_readonly("err_est", &OperatorValue::err_est)
      .def_readonly("n_used", &OperatorValue::n_used)
      .def_readonly("converged", &OperatorValue::converged)
      .def("__repr__", [](const OperatorValue& v) {
        return "OperatorValue(value=" + std::to_string(v.value) +
               ", err_est=" + std::to_string(v.err_est) + ")";
      });

  py::class_<PositiveFunction>(m, "PositiveFunction")
      .def("value", &PositiveFunction::value, py::arg("t"))
      .def_property_readonly("domain_upper", &PositiveFunction::X)
      .def("serialize",
           [](const PositiveFunction& f) { return serialize_function(f); });

  m.def("constant", &PositiveFunction::constant, py::arg("c"), py::arg("X"));
  m.def("power_input", &PositiveFunction::power_input, py::arg("lambda_"),
        py::arg("beta"), py::arg("X"));
  m.def(
      "make_function",
      [](const std::vector<double>& knots, const std::vector<double>& logvals) {
        return make_function(knots, logvals);
      },
      py::arg("knots"), py::arg("log_ordinates"));
  m.def("deserialize", &deserialize_function, py::arg("text"));
  m.def(
      "combine",
      [](const std::vector<PositiveFunction>& fs,
         const std::vector<double>& ws) { return combine(fs, ws); },
      py::arg("factors"), py::arg("weights"));
  m.def("combine_add", &combine_add, py::arg("f"), py::arg("g"),
        py::arg("tol") = 1e-9);
  m.def("pow_fn", &pow_fn, py::arg("f"), py::arg("w"));

  m.def(
      "hadamard_left",
      [](const PositiveFunction& z, double x, double alpha, double beta,
         double a, double rtol) {
        return hadamard_left(z, x, FracParams{alpha, beta}, a, rtol);
      },
      py::arg("z"), py::arg("x"), py::arg("alpha"), py::arg("beta"),
      py::arg("a") = 1.0, py::arg("rtol") = 1e-10);
  m.def(
      "hadamard_right",
      [](const PositiveFunction& z, double x, double b, double alpha,
         double beta, double rtol) {
        return hadamard_right(z, x, b, FracParams{alpha, beta}, rtol);
      },
      py::arg("z"), py::arg("x"), py::arg("b"), py::arg("alpha"),
      py::arg("beta"), py::arg("rtol") = 1e-10);
  m.def(
      "rl_left",
      [](const PositiveFunction& z, double x, double alpha, double beta,
         double a, double rtol) {
        return rl_proportional_left(z, x, FracParams{alpha, beta}, a, rtol);
      },
      py::arg("z"), py::arg("x"), py::arg("alpha"), py::arg("beta"),
      py::arg("a") = 1.0, py::arg("rtol") = 1e-10);
  m.def(
      "rl_right",
      [](const PositiveFunction& z, double x, double alpha, double beta,
         double b, double rtol) {
        return rl_proportional_right(z, x, FracParams{alpha, beta}, b, rtol);
      },
      py::arg("z"), py::arg("x"), py::arg("alpha"), py::arg("beta"),
      py::arg("b"), py::arg("rtol") = 1e-10);
  m.def(
      "closed_form_power_image",
      [](double x, double alpha, double beta, double lam) {
        return closed_form_power_image(x, FracParams{alpha, beta},
                                       PowerImageSpec{lam});
      },
      py::arg("x"), py::arg("alpha"), py::arg("beta"), py::arg("lambda_"));
  m.def(
      "semigroup_compose",
      [](const PositiveFunction& z, double x, double alpha1, double alpha2,
         double beta, double rtol) {
        return semigroup_compose(z, x, FracParams{alpha1, beta},
                                 FracParams{alpha2, beta}, rtol);
      },
      py::arg("z"), py::arg("x"), py::arg("alpha1"), py::arg("alpha2"),
      py::arg("beta"), py::arg("rtol") = 1e-10);

  m.def(
      "check_t3_1",
      [](const PositiveFunction& f, const PositiveFunction& g, double m_lo,
         double M_hi, double p_exp, double x, double alpha, double beta) {
        CorridorSpec spec;
        spec.m = m_lo;
        spec.M = M_hi;
        spec.p = p_exp;
        spec.q = p_exp > 1.0 ? p_exp / (p_exp - 1.0) : 2.0;
        const InequalityReport r =
            check_t3_1(f, g, spec, x, FracParams{alpha, beta});
        return py::make_tuple(r.lhs, r.rhs, r.margin,
                              std::string(verdict_name(r.verdict)));
      },
      py::arg("f"), py::arg("g"), py::arg("m"), py::arg("M"), py::arg("p"),
      py::arg("x"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "corridor_pair",
      [](double m_lo, double M_hi, std::uint64_t seed) {
        CorridorSpec spec;
        spec.m = m_lo;
        spec.M = M_hi;
        return gen_corridor_pair(spec, TrialSeed{seed, 0});
      },
      py::arg("m"), py::arg("M"), py::arg("seed"));

  m.def("run_identity_checks",
        [](int semigroup_trials, int reduction_trials, std::uint64_t seed) {
          py::list out;
          for (const IdentityResult& r :
               run_identity_checks(semigroup_trials, reduction_trials, seed)) {
            py::dict d;
            d["name"] = r.name;
            d["max_rel_err"] = r.max_rel_err;
            d["tolerance"] = r.tolerance;
            d["count"] = r.count;
            d["pass"] = r.pass;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("semigroup_trials") = 5, py::arg("reduction_trials") = 5,
        py::arg("seed") = 42);
}
