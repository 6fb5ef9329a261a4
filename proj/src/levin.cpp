#include "shipwave/levin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shipwave/faddeeva.hpp"

namespace shipwave::levin {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kSqrtPi = 1.7724538509055160273;

void require_nondegenerate(const FieldPoint& p, const char* where) {
    if (!is_finite(p)) throw std::domain_error(std::string(where) + ": non-finite point");
    if (p.y == 0.0 && p.z == 0.0)
        throw std::domain_error(std::string(where) + ": degenerate point y = z = 0");
}

}  // namespace

EndpointCoeffs endpoint_coeffs(const FieldPoint& p) {
    require_nondegenerate(p, "endpoint_coeffs");
    return {Complex(-p.y, -p.z), Complex(-2.0 * p.y, p.x - 2.0 * p.z),
            Complex(0.0, p.x - 1.5 * p.z)};
}

Complex ode_coeff(double tau, const FieldPoint& p) {
    const double q = std::sqrt(2.0 * tau * tau - 2.0 * tau + 1.0);
    return Complex(2.0 * p.y * tau,
                   (p.x * tau * (1.0 - tau) + p.z * (3.0 * tau * tau - 2.0 * tau + 1.0)) / q);
}

Complex boundary_value(const FieldPoint& p) {
    require_nondegenerate(p, "boundary_value");
    return 1.0 / (2.0 * Complex(p.y, p.z));
}

ComplexMatrix collocation_matrix(const FieldPoint& p, const ChebyshevGrid& grid,
                                 double quad_sign) {
    require_nondegenerate(p, "collocation_matrix");
    const int n = static_cast<int>(grid.nodes.size());
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        const double omt = 1.0 - grid.nodes[i];
        const double cube = omt * omt * omt;
        double rowsum = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const double e = -diff_entry(grid, i, k);
            rowsum += e;
            a(i, k) = cube * e;
        }
        a(i, i) = -cube * rowsum + ode_coeff(grid.nodes[i], p) + quad_sign * omt * omt;
    }
    return a;
}

Complex correction_term(double tau, const FieldPoint& p) {
    const auto [c2, c1, c0] = endpoint_coeffs(p);
    const Complex root = std::sqrt(c2);  // principal branch, Re >= 0
    const Complex eta = kI * root / (1.0 - tau) - kI * c1 / (2.0 * root);
    return kSqrtPi / (2.0 * (tau - 1.0) * root) * faddeeva_w(eta);
}

Complex correction_image(double tau, const FieldPoint& p) {
    if (tau >= 1.0) return Complex(1.0, 0.0);
    const auto [c2, c1, c0] = endpoint_coeffs(p);
    return 1.0 + (2.0 * c2 + c1 * (tau - 1.0) + ode_coeff(tau, p)) * correction_term(tau, p);
}

namespace {

Result solve_impl(const FieldPoint& p, int order, bool corrected, bool with_error_estimate) {
    if (order < 2) throw std::invalid_argument("levin solve: order must be >= 2");
    require_nondegenerate(p, "levin solve");
    const auto grid = shared_grid(ChebyshevKind::second_kind, order);
    ComplexMatrix a = collocation_matrix(p, *grid, -1.0);
    ComplexVector b(order + 1, Complex(1.0, 0.0));
    if (corrected)
        for (int k = 0; k <= order; ++k)
            b[k] = 1.0 - correction_image(grid->nodes[k], p);
    Result res;
    res.order = order;
    res.corrected = corrected;
    res.node_values = lu_solve(std::move(a), std::move(b));
    Complex phi0 = res.node_values[0];
    if (corrected) phi0 += correction_term(0.0, p);
    res.value = -phi0 * std::exp(Complex(p.y, p.x));
    if (with_error_estimate) res.error_estimate = error_estimate(p, res);
    return res;
}

}  // namespace

Result solve_plain(const FieldPoint& p, int order, bool with_error_estimate) {
    return solve_impl(p, order, false, with_error_estimate);
}

Result solve_corrected(const FieldPoint& p, int order, bool with_error_estimate) {
    return solve_impl(p, order, true, with_error_estimate);
}

double error_estimate(const FieldPoint& p, const Result& result) {
    const int m = result.order;
    if (static_cast<int>(result.node_values.size()) != m + 1)
        throw std::invalid_argument("error_estimate: result does not match its order");
    const auto grid = shared_grid(ChebyshevKind::second_kind, m);
    const auto check = shared_grid(ChebyshevKind::first_kind, m - 1);

    ComplexVector r(check->nodes.size());
    double rmax = 0.0;
    for (std::size_t k = 0; k < check->nodes.size(); ++k) {
        const double tau = check->nodes[k];
        Complex val, der;
        bary_eval_with_derivative(*grid, result.node_values, tau, val, der);
        const double omt = 1.0 - tau;
        Complex resid =
            omt * omt * omt * der + (ode_coeff(tau, p) - omt * omt) * val - 1.0;
        if (result.corrected) resid += correction_image(tau, p);
        r[k] = resid;
        rmax = std::max(rmax, std::abs(resid));
    }

    ComplexMatrix bmat = collocation_matrix(p, *check, -1.0);
    const ComplexVector big_r = lu_solve(std::move(bmat), r);
    double big_rmax = 0.0;
    for (const Complex& v : big_r) big_rmax = std::max(big_rmax, std::abs(v));

    if (p.y < 0.0) {
        const double fallback =
            0.5 * std::sqrt(std::numbers::pi / std::fabs(p.y)) * rmax;
        return std::exp(p.y) * std::min(big_rmax, fallback);
    }
    return big_rmax;  // the closed-form bound needs y < 0
}

bool correction_recommended(const FieldPoint& p) {
    if (p.y != 0.0 || p.z <= 0.0) return false;
    const double disc = p.x * p.x - 8.0 * p.z * p.z;
    if (disc < 0.0) return false;
    const double peak = (2.0 * p.z - p.x + std::sqrt(disc)) / (6.0 * p.z - 2.0 * p.x);
    return peak > 0.9;
}

Result solve_auto(const FieldPoint& p, const AutoOptions& opts) {
    int order = std::max(2, opts.order_start);
    Result res;
    while (true) {
        res = solve_impl(p, order, opts.corrected, true);
        if (res.error_estimate <= opts.tol || order >= opts.order_max) return res;
        order = std::min(2 * order, opts.order_max);
    }
}

}  // namespace shipwave::levin
