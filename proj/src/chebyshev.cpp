#include "shipwave/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace shipwave {

ChebyshevGrid grid_second_kind(int m) {
    if (m < 2) throw std::invalid_argument("grid_second_kind: order must be >= 2");
    ChebyshevGrid g{ChebyshevKind::second_kind, m, {}, {}};
    g.nodes.resize(m + 1);
    g.bary_weights.resize(m + 1);
    for (int k = 0; k <= m; ++k) {
        // (1 - cos(k pi / m)) / 2 in the numerically preferable sin^2 form
        const double s = std::sin(0.5 * std::numbers::pi * k / m);
        g.nodes[k] = s * s;
        const double sigma = (k == 0 || k == m) ? 1.0 : 2.0;
        g.bary_weights[k] = (k % 2 == 0) ? sigma : -sigma;
    }
    g.nodes[0] = 0.0;
    g.nodes[m] = 1.0;
    if (m % 2 == 0) g.nodes[m / 2] = 0.5;
    return g;
}

ChebyshevGrid grid_first_kind(int m_check) {
    if (m_check < 1) throw std::invalid_argument("grid_first_kind: order must be >= 1");
    ChebyshevGrid g{ChebyshevKind::first_kind, m_check, {}, {}};
    g.nodes.resize(m_check + 1);
    g.bary_weights.resize(m_check + 1);
    for (int k = 0; k <= m_check; ++k) {
        const double ang = (k + 0.5) * std::numbers::pi / (m_check + 1);
        const double s = std::sin(0.5 * ang);
        g.nodes[k] = s * s;
        g.bary_weights[k] = ((k % 2 == 0) ? 1.0 : -1.0) * std::sin(ang);
    }
    return g;
}

std::shared_ptr<const ChebyshevGrid> shared_grid(ChebyshevKind kind, int m) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const ChebyshevGrid>> cache;
    const std::pair<int, int> key{static_cast<int>(kind), m};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto grid = std::make_shared<const ChebyshevGrid>(
        kind == ChebyshevKind::second_kind ? grid_second_kind(m) : grid_first_kind(m));
    cache.emplace(key, grid);
    return grid;
}

namespace {

// index of a node within 4 eps of tau, or -1
int coincident_node(const ChebyshevGrid& g, double tau) {
    constexpr double snap = 4.0 * std::numeric_limits<double>::epsilon();
    int best = -1;
    double dist = snap;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const double d = std::fabs(tau - g.nodes[k]);
        if (d <= dist) {
            dist = d;
            best = static_cast<int>(k);
        }
    }
    return best;
}

}  // namespace

Complex bary_eval(const ChebyshevGrid& grid, std::span<const Complex> values, double tau) {
    if (values.size() != grid.nodes.size())
        throw std::invalid_argument("bary_eval: value count must match node count");
    const int hit = coincident_node(grid, tau);
    if (hit >= 0) return values[hit];
    Complex num(0.0, 0.0);
    double den = 0.0;
    for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
        const double c = grid.bary_weights[k] / (tau - grid.nodes[k]);
        num += c * values[k];
        den += c;
    }
    return num / den;
}

void bary_eval_with_derivative(const ChebyshevGrid& grid, std::span<const Complex> values,
                               double tau, Complex& value, Complex& derivative) {
    if (values.size() != grid.nodes.size())
        throw std::invalid_argument("bary_eval_with_derivative: value count mismatch");
    if (coincident_node(grid, tau) >= 0)
        throw std::invalid_argument("bary_eval_with_derivative: point coincides with a node");
    Complex t1(0.0, 0.0), t2(0.0, 0.0);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
        const double d = tau - grid.nodes[k];
        const double c = grid.bary_weights[k] / d;
        const double c2 = c / d;
        s1 += c;
        s2 += c2;
        t1 += c * values[k];
        t2 += c2 * values[k];
    }
    value = t1 / s1;
    derivative = value * (s2 / s1) - t2 / s1;
}

double diff_entry(const ChebyshevGrid& grid, int l, int k) {
    const int n = static_cast<int>(grid.nodes.size());
    if (l < 0 || l >= n || k < 0 || k >= n)
        throw std::out_of_range("diff_entry: index out of range");
    if (l == k) return 0.0;
    return grid.bary_weights[k] /
           (grid.bary_weights[l] * (grid.nodes[k] - grid.nodes[l]));
}

}  // namespace shipwave
