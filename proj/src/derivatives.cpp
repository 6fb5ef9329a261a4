#include "shipwave/derivatives.hpp"

#include <cmath>
#include <numbers>

#include "shipwave/faddeeva.hpp"

namespace shipwave {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kSqrtPi = 1.7724538509055160273;

void require_direction(const Direction& d) {
    if (!is_finite(d) || is_zero(d))
        throw std::domain_error("derivative: direction must be finite and nonzero");
}

void require_point(const FieldPoint& p) {
    if (!is_finite(p)) throw std::domain_error("derivative: non-finite point");
    if (!(p.y < 0.0))
        throw std::domain_error("deriv_levin: requires y < 0 (use deriv_cc on y = 0)");
}

}  // namespace

cc::Result deriv_cc(const FieldPoint& p, const Direction& d, double eps,
                    const cc::Caps& caps) {
    require_direction(d);
    return cc::integrate_weighted(p, d, eps, caps);
}

Complex deriv_ode_rhs(double tau, const Direction& d) {
    const double q2 = 2.0 * tau * tau - 2.0 * tau + 1.0;
    const double q = std::sqrt(q2);
    return Complex(d.l2 * q2, (d.l1 * (1.0 - tau) + d.l3 * tau) * q);
}

Complex deriv_correction_term(double tau, const FieldPoint& p, const Direction& d) {
    const auto [c2, c1, c0] = levin::endpoint_coeffs(p);
    const Complex root = std::sqrt(c2);
    const Complex eta = kI * root / (1.0 - tau) - kI * c1 / (2.0 * root);
    const Complex lead = Complex(d.l2, d.l3);
    const Complex g2sq = c2 * c2;
    // (tau-1) e^{Lambda} L0* collapsed through the Faddeeva function; the
    // explicit exponential part of L0* cancels against e^{Lambda} exactly.
    return lead * ((tau - 1.0) * kSqrtPi * (c1 * c1 + 2.0 * c2) /
                       (8.0 * g2sq * root) * faddeeva_w(eta) +
                   (tau - 1.0) * c1 / (4.0 * g2sq) - 1.0 / (2.0 * c2));
}

Complex deriv_correction_image(double tau, const FieldPoint& p, const Direction& d) {
    const Complex lead = Complex(d.l2, d.l3);
    if (tau >= 1.0) return lead;
    const auto [c2, c1, c0] = levin::endpoint_coeffs(p);
    return lead + (2.0 * c2 + c1 * (tau - 1.0) + levin::ode_coeff(tau, p)) *
                      deriv_correction_term(tau, p, d);
}

levin::Result deriv_levin(const FieldPoint& p, const Direction& d, int order,
                          bool corrected, bool with_error_estimate) {
    require_point(p);
    require_direction(d);
    if (order < 2) throw std::invalid_argument("deriv_levin: order must be >= 2");
    const auto grid = shared_grid(ChebyshevKind::second_kind, order);
    ComplexMatrix a = levin::collocation_matrix(p, *grid, +1.0);
    ComplexVector b(order + 1);
    for (int k = 0; k <= order; ++k) {
        b[k] = deriv_ode_rhs(grid->nodes[k], d);
        if (corrected) b[k] -= deriv_correction_image(grid->nodes[k], p, d);
    }
    levin::Result res;
    res.order = order;
    res.corrected = corrected;
    res.node_values = lu_solve(std::move(a), std::move(b));
    Complex phi0 = res.node_values[0];
    if (corrected) phi0 += deriv_correction_term(0.0, p, d);
    res.value = -phi0 * std::exp(Complex(p.y, p.x));
    if (with_error_estimate) res.error_estimate = deriv_error_estimate(p, d, res);
    return res;
}

double deriv_error_estimate(const FieldPoint& p, const Direction& d,
                            const levin::Result& result) {
    const int m = result.order;
    if (static_cast<int>(result.node_values.size()) != m + 1)
        throw std::invalid_argument("deriv_error_estimate: result does not match its order");
    const auto grid = shared_grid(ChebyshevKind::second_kind, m);
    const auto check = shared_grid(ChebyshevKind::first_kind, m - 1);

    ComplexVector r(check->nodes.size());
    double rmax = 0.0;
    for (std::size_t k = 0; k < check->nodes.size(); ++k) {
        const double tau = check->nodes[k];
        Complex val, der;
        bary_eval_with_derivative(*grid, result.node_values, tau, val, der);
        const double omt = 1.0 - tau;
        Complex resid = omt * omt * omt * der +
                        (levin::ode_coeff(tau, p) + omt * omt) * val -
                        deriv_ode_rhs(tau, d);
        if (result.corrected) resid += deriv_correction_image(tau, p, d);
        r[k] = resid;
        rmax = std::max(rmax, std::abs(resid));
    }

    ComplexMatrix bmat = levin::collocation_matrix(p, *check, +1.0);
    const ComplexVector big_r = lu_solve(std::move(bmat), r);
    double big_rmax = 0.0;
    for (const Complex& v : big_r) big_rmax = std::max(big_rmax, std::abs(v));
    const double fallback = 0.5 * std::sqrt(std::numbers::pi / std::fabs(p.y)) * rmax;
    return std::exp(p.y) * std::min(big_rmax, fallback);
}

}  // namespace shipwave
