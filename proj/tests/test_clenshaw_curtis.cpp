#include <cmath>
#include <doctest.h>
#include <numbers>
#include <random>

#include "shipwave/clenshaw_curtis.hpp"
#include "shipwave/wavelike.hpp"

using namespace shipwave;
using doctest::Approx;

namespace {

// direct O(n^2) weight construction from the defining cosine sums, sharing
// nothing with the transform-based path
std::vector<double> weights_reference(int n) {
    std::vector<double> kappa(n);
    kappa[0] = 1.0;
    for (int j = 1; j <= n / 2; ++j) kappa[j] = 1.0 / (1.0 - 4.0 * double(j) * double(j));
    for (int j = n / 2 + 1; j < n; ++j)
        kappa[j] = 1.0 / (1.0 - 4.0 * double(n - j) * double(n - j));
    std::vector<double> costab(n);
    for (int k = 0; k < n; ++k) costab[k] = std::cos(2.0 * std::numbers::pi * k / n);
    std::vector<double> v(n);
    for (int p = 0; p < n; ++p) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += kappa[j] * costab[(static_cast<long long>(j) * p) % n];
        v[p] = 2.0 / n * s;
    }
    std::vector<double> w(n + 1);
    w[0] = v[0] / 2.0;
    w[n] = v[0] / 2.0;
    for (int k = 1; k < n; ++k) w[k] = v[k];
    return w;
}

}  // namespace

TEST_CASE("steepest descent angle") {
    CHECK(cc::steepest_descent_angle(-1.0, 0.0) == 0.0);
    CHECK(cc::steepest_descent_angle(0.0, 1.0) == Approx(M_PI / 4).epsilon(1e-15));
    CHECK(cc::steepest_descent_angle(-1.0, 1.0) == Approx(M_PI / 8).epsilon(1e-14));
    CHECK(cc::steepest_descent_angle(0.0, -2.0) == Approx(-M_PI / 4).epsilon(1e-15));
    CHECK_THROWS_AS(cc::steepest_descent_angle(0.0, 0.0), std::domain_error);

    std::mt19937 rng(8);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double y = -std::fabs(u(rng));
        const double z = u(rng);
        if (y == 0.0 && z == 0.0) continue;
        const double th = cc::steepest_descent_angle(y, z);
        const double sgn = z > 0 ? 1.0 : (z < 0 ? -1.0 : 0.0);
        CHECK(sgn * th >= 0.0);
        CHECK(sgn * th <= M_PI / 4 + 1e-15);
    }
}

TEST_CASE("contour split point") {
    CHECK(cc::contour_split_point({-1.0, 0.0, 0.5}) == Approx(1.0).epsilon(1e-14));
    CHECK(cc::contour_split_point({-2.0, 0.0, 0.5}) == Approx(2.0).epsilon(1e-14));
    const double s8 = std::sin(M_PI / 8), c8 = std::cos(M_PI / 8);
    CHECK(cc::contour_split_point({-1.0, -1.0, 1.0}) ==
          Approx(s8 / (2.0 * (c8 + s8))).epsilon(1e-13));
    CHECK_THROWS_AS(cc::contour_split_point({-1.0, -1.0, -1.0}), std::domain_error);
}

TEST_CASE("weights for the smallest rule match Simpson") {
    const auto w = cc::weights(2);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    CHECK(std::fabs(w.w[0] - 1.0 / 3.0) <= eps);
    CHECK(std::fabs(w.w[1] - 4.0 / 3.0) <= eps);
    CHECK(std::fabs(w.w[2] - 1.0 / 3.0) <= eps);
}

TEST_CASE("weights sum to two and are symmetric") {
    for (int n : {2, 4, 8, 64, 256, 1024}) {
        const auto w = cc::weights(n);
        double sum = 0.0;
        for (double wk : w.w) sum += wk;
        CHECK(std::fabs(sum - 2.0) <= 1e-13);
        for (int k = 0; k <= n; ++k) CHECK(w.w[k] == w.w[n - k]);
    }
}

TEST_CASE("weights match the direct construction") {
    for (int n : {2, 4, 8, 16, 64, 256}) {
        const auto fast = cc::weights(n);
        const auto ref = weights_reference(n);
        for (int k = 0; k <= n; ++k) CHECK(std::fabs(fast.w[k] - ref[k]) <= 1e-13);
    }
}

TEST_CASE("quadrature exactness and accuracy on [-1,1]") {
    const auto w4 = cc::weights(4);
    CHECK(std::abs(cc::apply(w4, [](double) { return Complex(1.0, 0.0); }) - 2.0) < 1e-15);
    CHECK(std::abs(cc::apply(w4, [](double t) { return Complex(t, 0.0); })) <= 1e-15);
    CHECK(std::abs(cc::apply(w4, [](double t) { return Complex(t * t, 0.0); }) - 2.0 / 3.0) <=
          1e-15);
    const auto w16 = cc::weights(16);
    const Complex expint = cc::apply(w16, [](double t) { return Complex(std::exp(t), 0.0); });
    CHECK(std::abs(expint - (std::exp(1.0) - std::exp(-1.0))) <= 1e-12);
}

TEST_CASE("apply reports non-finite integrands") {
    const auto w = cc::weights(4);
    CHECK_THROWS_WITH_AS(
        cc::apply(w, [](double t) { return Complex(t == 0.0 ? std::nan("") : 1.0, 0.0); }),
        doctest::Contains("non-finite"), std::runtime_error);
}

TEST_CASE("integrate reproduces the closed form on the axis") {
    const auto r = cc::integrate({0.0, -1.0, 0.0}, 1e-12);
    REQUIRE(r.converged);
    const double want = 0.5 * std::sqrt(std::numbers::pi) * std::exp(-1.0);
    CHECK(std::abs(r.value - Complex(want, 0.0)) <= 1e-12);
    CHECK(r.level >= 2);  // at least three members of the sequence, always
}

TEST_CASE("integrate benchmark pairs") {
    {
        const auto r1 = cc::integrate({-1.0, -0.5, 0.5}, 1e-10);
        const auto r2 = cc::integrate({-1.0, -0.5, -0.5}, 1e-10);
        REQUIRE(r1.converged);
        REQUIRE(r2.converged);
        const double iinf = (r1.value.imag() + r2.value.imag()) / std::numbers::pi;
        CHECK(std::fabs(iinf - (-0.3132089735)) <= 1e-8);
    }
    {
        const auto r1 = cc::integrate({-1.0, -0.1, 0.1}, 1e-10);
        const auto r2 = cc::integrate({-1.0, -0.1, -0.1}, 1e-10);
        const double iinf = (r1.value.imag() + r2.value.imag()) / std::numbers::pi;
        CHECK(std::fabs(iinf - (-1.0716691716)) <= 1e-8);
    }
}

TEST_CASE("node sets are exactly nested under doubling") {
    for (int n : {2, 8, 64, 512}) {
        const auto coarse = cc::nodes(n);
        const auto fine = cc::nodes(2 * n);
        for (int k = 0; k <= n; ++k) CHECK(fine[2 * k] == coarse[k]);
    }
}

TEST_CASE("evaluation-count accounting") {
    {
        // z < 0: single rotated integral, count 2^l * 2 + 1
        const auto r = cc::integrate({-1.0, -0.5, -0.5}, 1e-10);
        CHECK(r.level_finite == -1);
        CHECK(r.eval_count == (2LL << r.level_tail) + 1);
    }
    {
        // z > 0: split contour, count (2^l' + 2^l'') * 2 + 2
        const auto r = cc::integrate({-1.0, -0.5, 0.5}, 1e-10);
        CHECK(r.level_finite >= 0);
        CHECK(r.eval_count == (2LL << r.level_finite) + (2LL << r.level_tail) + 2);
        CHECK(r.level == std::max(r.level_finite, r.level_tail));
    }
}

TEST_CASE("contour decay holds at every evaluated node") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> ux(-10.0, 0.0);
    std::uniform_real_distribution<double> uz(-5.0, 5.0);
    const double ys[] = {0.0, -0.1, -0.25, -0.5, -2.0};
    for (int i = 0; i < 60; ++i) {
        const FieldPoint p{ux(rng), ys[i % 5], uz(rng)};
        if (p.y == 0.0 && std::fabs(p.z) < 1e-3) continue;
        const auto r = cc::integrate(p, 1e-8);
        INFO("point (", p.x, ", ", p.y, ", ", p.z, ")");
        CHECK(r.max_phase_re <= 1e-12);
    }
}

TEST_CASE("cross-tolerance consistency on a small sweep") {
    int checked = 0, good = 0;
    for (double y : {0.0, -0.25}) {
        for (int ix = 0; ix < 8; ++ix) {
            for (int iz = 0; iz < 9; ++iz) {
                const double x = -10.0 + 10.0 * ix / 7;
                const double z = -0.25 + 0.5 * iz / 8;
                if (y == 0.0 && z == 0.0 && x < 0.0) continue;
                if (y == 0.0 && z == 0.0) continue;
                const auto lo = cc::integrate({x, y, z}, 1e-6);
                const auto hi = cc::integrate({x, y, z}, 1e-12);
                if (!lo.converged || !hi.converged) continue;
                ++checked;
                if (std::abs(lo.value - hi.value) <= 1e-6) ++good;
            }
        }
    }
    REQUIRE(checked > 50);
    CHECK(good == checked);
}

TEST_CASE("cap produces a flagged, still-usable result") {
    cc::Caps caps;
    caps.max_evals_per_integral = 65;  // artificially tight
    const auto r = cc::integrate({-8.0, 0.0, 0.01}, 1e-12, caps);
    CHECK_FALSE(r.converged);
    CHECK(std::isfinite(r.value.real()));
    CHECK(r.eval_count > 0);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(cc::integrate({1.0, -1.0, 0.0}, 1e-8), std::domain_error);
    CHECK_THROWS_AS(cc::integrate({-1.0, 0.5, 0.0}, 1e-8), std::domain_error);
    CHECK_THROWS_AS(cc::integrate({-1.0, 0.0, 0.0}, 1e-8), std::domain_error);
    CHECK_THROWS_AS(cc::weights(3), std::invalid_argument);
    CHECK_THROWS_AS(cc::weights(0), std::invalid_argument);
}
