#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shipwave/derivatives.hpp"
#include "shipwave/faddeeva.hpp"
#include "shipwave/wavelike.hpp"

namespace py = pybind11;
using namespace shipwave;

namespace {

EvalConfig make_config(const std::string& method, double eps, int order, bool doubling) {
    EvalConfig cfg;
    if (method == "levin") cfg.method = Method::levin;
    else if (method == "levin-plain") cfg.method = Method::levin_plain;
    else if (method == "cc") cfg.method = Method::cc;
    else if (method == "auto") cfg.method = Method::automatic;
    else throw std::invalid_argument("method must be auto|levin|levin-plain|cc");
    cfg.eps = eps;
    cfg.levin_order = order;
    cfg.levin_doubling = doubling;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_shipwave, m) {
    m.doc() = "Wavelike term of the Kelvin wave-source Green's function";

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("value", &EvalReport::value)
        .def_property_readonly("method",
                               [](const EvalReport& r) { return method_name(r.method_used); })
        .def_readonly("error_estimate", &EvalReport::error_estimate)
        .def_readonly("eval_count", &EvalReport::eval_count)
        .def_readonly("d_param", &EvalReport::d_param)
        .def_readonly("theta", &EvalReport::theta)
        .def_readonly("critical_points", &EvalReport::critical_points)
        .def_readonly("converged", &EvalReport::converged)
        .def("__repr__", [](const EvalReport& r) {
            return "<EvalReport value=(" + std::to_string(r.value.real()) + "," +
                   std::to_string(r.value.imag()) + ") method=" + method_name(r.method_used) +
                   ">";
        });

    m.def(
        "eval_i",
        [](double x, double y, double z, const std::string& method, double eps, int order,
           bool doubling) {
            return eval_I(FieldPoint{x, y, z}, make_config(method, eps, order, doubling));
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("method") = "auto",
        py::arg("eps") = 1e-10, py::arg("order") = 100, py::arg("doubling") = true,
        "Wave integral I(x, y, z)");

    m.def(
        "eval_i_infinity",
        [](double x, double y, double z, double y0, const std::string& method, double eps,
           int order, bool doubling) {
            return eval_I_infinity(x, y + y0, z, make_config(method, eps, order, doubling));
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("y0") = 0.0,
        py::arg("method") = "auto", py::arg("eps") = 1e-10, py::arg("order") = 100,
        py::arg("doubling") = true,
        "Assembled wavelike term (1/pi) H(-x) Im{I(x,y,z) + I(x,y,-z)}");

    m.def(
        "deriv",
        [](double x, double y, double z, double l1, double l2, double l3,
           const std::string& method, double eps, int order) {
            const FieldPoint p{x, y, z};
            const Direction d{l1, l2, l3};
            if (method == "cc") return deriv_cc(p, d, eps).value;
            if (method == "levin") return deriv_levin(p, d, order, true).value;
            if (method == "levin-plain") return deriv_levin(p, d, order, false).value;
            throw std::invalid_argument("method must be cc|levin|levin-plain");
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("l1"), py::arg("l2"),
        py::arg("l3"), py::arg("method") = "cc", py::arg("eps") = 1e-10,
        py::arg("order") = 100, "Directional derivative of the wave integral");

    m.def(
        "levin_solve",
        [](double x, double y, double z, int order, bool corrected) {
            const auto r = corrected ? levin::solve_corrected(FieldPoint{x, y, z}, order)
                                     : levin::solve_plain(FieldPoint{x, y, z}, order);
            return py::make_tuple(r.value, r.error_estimate);
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("order") = 100,
        py::arg("corrected") = true,
        "Collocation solve; returns (value, error_estimate)");

    m.def(
        "cc_integrate",
        [](double x, double y, double z, double eps) {
            const auto r = cc::integrate(FieldPoint{x, y, z}, eps);
            return py::make_tuple(r.value, r.eval_count, r.converged);
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("eps") = 1e-10,
        "Contour quadrature; returns (value, eval_count, converged)");

    m.def(
        "cc_weights", [](int n) { return cc::weights(n).w; }, py::arg("n"),
        "Clenshaw-Curtis weights for n intervals (n even)");

    m.def("faddeeva_w", &faddeeva_w, py::arg("eta"),
          "Faddeeva function w(eta) = exp(-eta^2) erfc(-i eta)");
    m.def("erfc", &erfc_complex, py::arg("zeta"), "Complementary error function");
    m.def("closed_form_axis", &closed_form_axis, py::arg("y"),
          "Closed form of I on the axis x = z = 0 (y < 0)");
    m.def(
        "critical_points",
        [](double x, double y, double z) { return critical_points(FieldPoint{x, y, z}); },
        py::arg("x"), py::arg("y"), py::arg("z"),
        "Stationary points of the oscillatory phase");
}
