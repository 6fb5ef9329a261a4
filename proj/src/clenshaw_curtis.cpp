#include "shipwave/clenshaw_curtis.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "shipwave/fft.hpp"

namespace shipwave::cc {

namespace {

constexpr int kInitialIntervals = 2;  // N0
constexpr double kReserveFactor = 10.0;

void require_domain(const FieldPoint& p, const char* where) {
    if (!is_finite(p)) throw std::domain_error(std::string(where) + ": non-finite point");
    if (p.x > 0.0) throw std::domain_error(std::string(where) + ": requires x <= 0");
    if (p.y > 0.0) throw std::domain_error(std::string(where) + ": requires y <= 0");
    if (p.y == 0.0 && p.z == 0.0)
        throw std::domain_error(std::string(where) + ": degenerate point y = z = 0");
}

}  // namespace

double steepest_descent_angle(double y, double z) {
    const double rho = std::hypot(y, z);
    if (rho == 0.0)
        throw std::domain_error("steepest_descent_angle: degenerate point y = z = 0");
    const double c = std::sqrt((1.0 + std::fabs(y) / rho) / 2.0);
    const double sgn = (z > 0.0) ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
    const double s = sgn * std::sqrt((1.0 - std::fabs(y) / rho) / 2.0);
    return std::atan2(s, c);
}

double contour_split_point(const FieldPoint& p) {
    if (!(p.z > 0.0)) throw std::domain_error("contour_split_point: requires z > 0");
    const double rho = std::hypot(p.y, p.z);
    const double c = std::sqrt((1.0 + std::fabs(p.y) / rho) / 2.0);
    const double s = std::sqrt((1.0 - std::fabs(p.y) / rho) / 2.0);
    return std::fabs(p.x) * s / (2.0 * (std::fabs(p.y) * c + p.z * s));
}

ContourPlan plan_contour(const FieldPoint& p) {
    require_domain(p, "plan_contour");
    ContourPlan plan;
    const double rho = std::hypot(p.y, p.z);
    plan.cos_theta = std::sqrt((1.0 + std::fabs(p.y) / rho) / 2.0);
    const double sgn = (p.z > 0.0) ? 1.0 : (p.z < 0.0 ? -1.0 : 0.0);
    plan.sin_theta = sgn * std::sqrt((1.0 - std::fabs(p.y) / rho) / 2.0);
    plan.theta = std::atan2(plan.sin_theta, plan.cos_theta);
    plan.split = p.z > 0.0;
    plan.t_split = plan.split ? contour_split_point(p) : 0.0;
    return plan;
}

Weights weights(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("cc::weights: n must be even, >= 2");
    ComplexVector kappa(n);
    kappa[0] = 1.0;
    for (int j = 1; j <= n / 2; ++j) kappa[j] = 1.0 / (1.0 - 4.0 * double(j) * double(j));
    for (int j = n / 2 + 1; j < n; ++j) {
        const double q = double(n - j);
        kappa[j] = 1.0 / (1.0 - 4.0 * q * q);
    }
    const ComplexVector v = dft(kappa);
    Weights out;
    out.n = n;
    out.w.resize(n + 1);
    const double scale = 2.0 / n;
    out.w[0] = scale * v[0].real() / 2.0;
    for (int k = 1; k < n; ++k) out.w[k] = scale * v[k].real();
    out.w[n] = out.w[0];
    // enforce the exact mirror symmetry the real-input transform has in exact
    // arithmetic
    for (int k = 0; k <= n / 2; ++k) {
        const double m = 0.5 * (out.w[k] + out.w[n - k]);
        out.w[k] = m;
        out.w[n - k] = m;
    }
    return out;
}

std::shared_ptr<const Weights> shared_weights(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const Weights>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto w = std::make_shared<const Weights>(weights(n));
    cache.emplace(n, w);
    return w;
}

std::vector<double> nodes(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("cc::nodes: n must be even, >= 2");
    std::vector<double> t(n + 1);
    for (int k = 0; k < n / 2; ++k) {
        const double v = std::cos(k * std::numbers::pi / n);
        t[k] = v;
        t[n - k] = -v;
    }
    t[n / 2] = 0.0;
    return t;
}

Complex apply(const Weights& w, const std::function<Complex(double)>& f) {
    const auto t = nodes(w.n);
    Complex sum(0.0, 0.0);
    for (int k = 0; k <= w.n; ++k) {
        const Complex v = f(t[k]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("cc::apply: non-finite integrand value at node " +
                                     std::to_string(t[k]));
        sum += w.w[k] * v;
    }
    return sum;
}

namespace {

struct SingleResult {
    Complex value{0.0, 0.0};
    long long evals = 0;
    int level = 0;
    bool converged = false;
};

// Doubling Clenshaw-Curtis driver on [-1,1]; f values at coarse nodes are
// reused when the node count doubles.
template <typename F>
SingleResult integrate_doubling(F&& f, double eps, long long max_evals) {
    SingleResult out;
    ComplexVector fv;
    Complex f2[3];  // last three approximations
    int have = 0;
    constexpr int kHardLevelCap = 28;  // keeps n representable and memory sane
    for (int level = 0; level <= kHardLevelCap; ++level) {
        const int n = kInitialIntervals << level;
        if (static_cast<long long>(n) + 1 > max_evals) {
            out.converged = false;
            return out;
        }
        const auto t = nodes(n);
        if (fv.empty()) {
            fv.resize(n + 1);
            for (int k = 0; k <= n; ++k) fv[k] = f(t[k]);
        } else {
            ComplexVector next(n + 1);
            for (int k = 0; k <= n / 2; ++k) next[2 * k] = fv[k];
            for (int k = 1; k <= n; k += 2) next[k] = f(t[k]);
            fv = std::move(next);
        }
        for (int k = 0; k <= n; ++k)
            if (!std::isfinite(fv[k].real()) || !std::isfinite(fv[k].imag()))
                throw std::runtime_error("cc::integrate: non-finite integrand value at node " +
                                         std::to_string(t[k]));
        const auto w = shared_weights(n);
        Complex approx(0.0, 0.0);
        for (int k = 0; k <= n; ++k) approx += w->w[k] * fv[k];

        f2[0] = f2[1];
        f2[1] = f2[2];
        f2[2] = approx;
        have = std::min(have + 1, 3);
        out.value = approx;
        out.evals = static_cast<long long>(n) + 1;
        out.level = level;
        if (have == 3) {
            const double d21 = std::abs(f2[2] - f2[1]);
            const double d20 = std::abs(f2[2] - f2[0]);
            const double d10 = std::abs(f2[1] - f2[0]);
            if (std::max({kReserveFactor * d21, d20, d10}) <= eps) {
                out.converged = true;
                return out;
            }
        }
    }
    out.converged = false;
    return out;
}

// amplitude(T) multiplies e^{phase(T)}; amplitude = 1 gives the wave integral
// itself, the derivative weight gives the directional derivative.
template <typename Amp>
Result integrate_impl(const FieldPoint& p, const Amp& amplitude, double eps,
                      const Caps& caps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("cc::integrate: tolerance must be positive");
    const ContourPlan plan = plan_contour(p);
    const Complex rot(plan.cos_theta, plan.sin_theta);
    Result res;
    double max_re = -std::numeric_limits<double>::infinity();

    const auto tail_integrand = [&](double u) -> Complex {
        if (u >= 1.0) return Complex(0.0, 0.0);  // image of t = infinity
        const double omu = 1.0 - u;
        const double t = (1.0 + u) / omu;
        const Complex big_t = plan.t_split + rot * t;
        const Complex ph = phase(big_t, p);
        max_re = std::max(max_re, ph.real());
        return 2.0 * rot / (omu * omu) * amplitude(big_t) * std::exp(ph);
    };

    if (!plan.split) {
        const SingleResult tail = integrate_doubling(tail_integrand, eps,
                                                     caps.max_evals_per_integral);
        res.value = tail.value;
        res.eval_count = tail.evals;
        res.level = res.level_tail = tail.level;
        res.converged = tail.converged;
    } else {
        const auto finite_integrand = [&](double u) -> Complex {
            const Complex t(plan.t_split * (u + 1.0) / 2.0, 0.0);
            const Complex ph = phase(t, p);
            max_re = std::max(max_re, ph.real());
            return plan.t_split / 2.0 * amplitude(t) * std::exp(ph);
        };
        const SingleResult fin = integrate_doubling(finite_integrand, eps,
                                                    caps.max_evals_per_integral);
        const SingleResult tail = integrate_doubling(tail_integrand, eps,
                                                     caps.max_evals_per_integral);
        res.value = fin.value + tail.value;
        res.eval_count = fin.evals + tail.evals;
        res.level_finite = fin.level;
        res.level_tail = tail.level;
        res.level = std::max(fin.level, tail.level);
        res.converged = fin.converged && tail.converged;
    }
    res.max_phase_re = max_re;
    return res;
}

}  // namespace

Result integrate(const FieldPoint& p, double eps, const Caps& caps) {
    require_domain(p, "cc::integrate");
    return integrate_impl(p, [](const Complex&) { return Complex(1.0, 0.0); }, eps, caps);
}

Result integrate_weighted(const FieldPoint& p, const Direction& d, double eps,
                          const Caps& caps) {
    require_domain(p, "cc::integrate_weighted");
    if (!is_finite(d) || is_zero(d))
        throw std::domain_error("cc::integrate_weighted: direction must be finite and nonzero");
    return integrate_impl(p, [&d](const Complex& t) { return phase(t, d); }, eps, caps);
}

}  // namespace shipwave::cc
