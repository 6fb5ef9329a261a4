#include "shipwave/wavelike.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace shipwave {

const char* method_name(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::levin: return "levin";
        case Method::levin_plain: return "levin_plain";
        case Method::cc: return "cc";
        case Method::closed_form: return "closed_form";
    }
    return "?";
}

double closed_form_axis(double y) {
    if (!(y < 0.0)) throw std::domain_error("closed_form_axis: requires y < 0");
    return 0.5 * std::sqrt(std::numbers::pi) * std::exp(y) / std::sqrt(-y);
}

std::vector<double> critical_points(const FieldPoint& p) {
    if (!(p.z > 0.0) || !(p.x < 0.0)) return {};
    const double a = -p.x / (4.0 * p.z);
    const double disc = a * a - 0.5;
    if (disc < 0.0) return {};
    // treat a discriminant at rounding level as the merged double point on
    // the wedge boundary x = -2 sqrt(2) z
    if (disc <= 4.0 * std::numeric_limits<double>::epsilon() * a * a) return {a};
    const double s = std::sqrt(disc);
    return {a - s, a + s};
}

namespace {

void validate_point(const FieldPoint& p) {
    if (!is_finite(p)) throw std::domain_error("eval_I: non-finite point");
    if (p.x > 0.0) throw std::domain_error("eval_I: requires x <= 0");
    if (p.y > 0.0) throw std::domain_error("eval_I: requires y <= 0");
    if (p.y == 0.0 && p.z == 0.0 && p.x < 0.0)
        throw track_singularity_error(
            "eval_I: the source track y = 0, z = 0, x < 0 is a line of essential "
            "singularities");
}

void fill_geometry(EvalReport& rep, const FieldPoint& p) {
    const double rho = std::hypot(p.y, p.z);
    if (rho > 0.0) {
        rep.d_param = p.x * p.x / (4.0 * rho);
        rep.theta = cc::steepest_descent_angle(p.y, p.z);
    }
    rep.critical_points = critical_points(p);
}

EvalReport eval_via_levin(const FieldPoint& p, const EvalConfig& cfg, bool corrected) {
    levin::Result r;
    if (cfg.levin_doubling) {
        levin::AutoOptions opts;
        opts.tol = cfg.eps;
        opts.order_start = std::max(2, cfg.levin_order);
        opts.order_max = cfg.levin_order_max;
        opts.corrected = corrected;
        r = levin::solve_auto(p, opts);
    } else {
        r = corrected ? levin::solve_corrected(p, cfg.levin_order)
                      : levin::solve_plain(p, cfg.levin_order);
    }
    EvalReport rep;
    rep.value = r.value;
    rep.method_used = corrected ? Method::levin : Method::levin_plain;
    rep.error_estimate = r.error_estimate;
    rep.eval_count = r.order + 1;
    rep.converged = r.error_estimate <= cfg.eps;
    fill_geometry(rep, p);
    return rep;
}

EvalReport eval_via_cc(const FieldPoint& p, const EvalConfig& cfg) {
    const cc::Result r = cc::integrate(p, cfg.eps, cfg.caps);
    EvalReport rep;
    rep.value = r.value;
    rep.method_used = Method::cc;
    rep.error_estimate = cfg.eps;
    rep.eval_count = r.eval_count;
    rep.converged = r.converged;
    fill_geometry(rep, p);
    return rep;
}

}  // namespace

EvalReport eval_I(const FieldPoint& p, const EvalConfig& cfg) {
    validate_point(p);
    if (p.x == 0.0 && p.z == 0.0) {
        // includes the origin, where the closed form rejects y = 0
        EvalReport rep;
        rep.value = Complex(closed_form_axis(p.y), 0.0);
        rep.method_used = Method::closed_form;
        rep.error_estimate = 4.0 * std::numeric_limits<double>::epsilon() *
                             std::abs(rep.value);
        rep.eval_count = 1;
        fill_geometry(rep, p);
        return rep;
    }
    switch (cfg.method) {
        case Method::closed_form:
            throw std::domain_error("eval_I: closed form applies only at x = z = 0");
        case Method::levin:
            return eval_via_levin(p, cfg, cfg.levin_corrected.value_or(true));
        case Method::levin_plain:
            return eval_via_levin(p, cfg, cfg.levin_corrected.value_or(false));
        case Method::cc:
            return eval_via_cc(p, cfg);
        case Method::automatic: {
            const double d = difficulty_parameter(p);
            if (p.y <= cfg.auto_y_max && d <= cfg.auto_d_max) {
                const bool corrected =
                    cfg.levin_corrected.value_or(levin::correction_recommended(p));
                return eval_via_levin(p, cfg, corrected);
            }
            return eval_via_cc(p, cfg);
        }
    }
    throw std::logic_error("eval_I: unknown method");
}

EvalReport eval_I_infinity(double x, double y_sum, double z, const EvalConfig& cfg) {
    if (!std::isfinite(x) || !std::isfinite(y_sum) || !std::isfinite(z))
        throw std::domain_error("eval_I_infinity: non-finite arguments");
    if (y_sum > 0.0) throw std::domain_error("eval_I_infinity: requires y + y0 <= 0");
    if (x >= 0.0) {
        // Heaviside factor: zero ahead of the source, and H(0) taken as 0
        EvalReport rep;
        rep.value = Complex(0.0, 0.0);
        rep.method_used = Method::closed_form;
        rep.eval_count = 0;
        const FieldPoint px{x, y_sum, std::fabs(z)};
        if (y_sum != 0.0 || z != 0.0) fill_geometry(rep, px);
        return rep;
    }
    const double za = std::fabs(z);
    const FieldPoint plus{x, y_sum, za};
    if (za == 0.0) {
        EvalReport rep = eval_I(plus, cfg);
        rep.value = Complex(2.0 * rep.value.imag() / std::numbers::pi, 0.0);
        rep.error_estimate = 2.0 * rep.error_estimate / std::numbers::pi;
        return rep;
    }
    const FieldPoint minus{x, y_sum, -za};
    const EvalReport rp = eval_I(plus, cfg);
    const EvalReport rm = eval_I(minus, cfg);
    EvalReport rep = rp;  // geometry of the z > 0 member
    rep.value = Complex((rp.value.imag() + rm.value.imag()) / std::numbers::pi, 0.0);
    rep.error_estimate = (rp.error_estimate + rm.error_estimate) / std::numbers::pi;
    rep.eval_count = rp.eval_count + rm.eval_count;
    rep.converged = rp.converged && rm.converged;
    return rep;
}

}  // namespace shipwave
