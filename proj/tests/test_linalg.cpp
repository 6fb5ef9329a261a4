#include <cmath>
#include <doctest.h>
#include <numbers>
#include <random>

#include "shipwave/fft.hpp"
#include "shipwave/linalg.hpp"

using shipwave::Complex;
using shipwave::ComplexMatrix;
using shipwave::ComplexVector;
using shipwave::dft;
using shipwave::lu_solve;

namespace {

// direct O(N^2) transform, independent of the production path
ComplexVector dft_reference(const ComplexVector& u) {
    const std::size_t n = u.size();
    ComplexVector out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex s(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = -2.0 * std::numbers::pi *
                               static_cast<double>((k * m) % n) / static_cast<double>(n);
            s += u[m] * Complex(std::cos(ang), std::sin(ang));
        }
        out[k] = s;
    }
    return out;
}

}  // namespace

TEST_CASE("lu_solve on hand-checked systems") {
    {
        ComplexMatrix a(2, 2);
        a(0, 0) = 1.0;
        a(1, 1) = 1.0;
        const ComplexVector x = lu_solve(a, {Complex(1.0, 1.0), Complex(2.0, 0.0)});
        CHECK(std::abs(x[0] - Complex(1.0, 1.0)) < 1e-15);
        CHECK(std::abs(x[1] - Complex(2.0, 0.0)) < 1e-15);
    }
    {
        ComplexMatrix a(2, 2);
        a(0, 0) = 2.0;
        a(1, 1) = Complex(0.0, 1.0);
        const ComplexVector x = lu_solve(a, {Complex(2.0, 0.0), Complex(0.0, 1.0)});
        CHECK(std::abs(x[0] - 1.0) < 1e-15);
        CHECK(std::abs(x[1] - 1.0) < 1e-15);
    }
    {
        // [[1,1],[1,-1]] x = (3,-1)  =>  x = (1,2)
        ComplexMatrix a(2, 2);
        a(0, 0) = 1.0;
        a(0, 1) = 1.0;
        a(1, 0) = 1.0;
        a(1, 1) = -1.0;
        const ComplexVector x = lu_solve(a, {Complex(3.0, 0.0), Complex(-1.0, 0.0)});
        CHECK(std::abs(x[0] - 1.0) < 1e-14);
        CHECK(std::abs(x[1] - 2.0) < 1e-14);
    }
}

TEST_CASE("lu_solve multiply-back on random well-conditioned systems") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 50;
        ComplexMatrix a(n, n);
        ComplexVector b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(u(rng), u(rng));
            a(i, i) += Complex(2.0 * n, 0.0);  // diagonal dominance
            b[i] = Complex(u(rng), u(rng));
        }
        const ComplexVector x = lu_solve(a, b);
        double bmax = 0.0, rmax = 0.0, anorm = 0.0, xmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex r = -b[i];
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                r += a(i, j) * x[j];
                row += std::abs(a(i, j));
            }
            rmax = std::max(rmax, std::abs(r));
            bmax = std::max(bmax, std::abs(b[i]));
            anorm = std::max(anorm, row);
            xmax = std::max(xmax, std::abs(x[i]));
        }
        CHECK(rmax <= 1e-12 * bmax);
        CHECK(rmax <= 1e3 * std::numeric_limits<double>::epsilon() * anorm * xmax);
    }
}

TEST_CASE("lu_solve rejects singular and malformed input") {
    ComplexMatrix zero(3, 3);
    CHECK_THROWS_AS(lu_solve(zero, ComplexVector(3, Complex(1.0, 0.0))),
                    shipwave::singular_matrix_error);

    ComplexMatrix rank1(2, 2);
    rank1(0, 0) = 1.0;
    rank1(0, 1) = 2.0;
    rank1(1, 0) = 2.0;
    rank1(1, 1) = 4.0;
    CHECK_THROWS_AS(lu_solve(rank1, ComplexVector(2, Complex(1.0, 0.0))),
                    shipwave::singular_matrix_error);

    ComplexMatrix rect(2, 3);
    CHECK_THROWS_AS(lu_solve(rect, ComplexVector(3)), std::invalid_argument);

    ComplexMatrix bad(1, 1);
    bad(0, 0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(lu_solve(bad, ComplexVector(1)), std::invalid_argument);
}

TEST_CASE("dft on hand-checked vectors") {
    {
        const ComplexVector out = dft({Complex(1.0, 0.0), Complex(1.0, 0.0)});
        CHECK(std::abs(out[0] - 2.0) < 1e-15);
        CHECK(std::abs(out[1]) < 1e-15);
    }
    {
        const ComplexVector out =
            dft({Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)});
        for (int k = 0; k < 4; ++k) CHECK(std::abs(out[k] - 1.0) < 1e-15);
    }
    {
        const ComplexVector out =
            dft({Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)});
        const Complex want[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
        for (int k = 0; k < 4; ++k) CHECK(std::abs(out[k] - want[k]) < 1e-15);
    }
}

TEST_CASE("dft matches direct summation up to N = 64") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {2u, 3u, 8u, 12u, 16u, 33u, 64u}) {
        ComplexVector in(n);
        for (auto& v : in) v = Complex(u(rng), u(rng));
        const ComplexVector a = dft(in);
        const ComplexVector b = dft_reference(in);
        double scale = 0.0, diff = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            scale = std::max(scale, std::abs(b[k]));
            diff = std::max(diff, std::abs(a[k] - b[k]));
        }
        CHECK(diff <= 1e-12 * scale);
    }
}

TEST_CASE("dft round trip at large power-of-two sizes") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {std::size_t(1) << 12, std::size_t(1) << 16}) {
        ComplexVector in(n);
        for (auto& v : in) v = Complex(u(rng), u(rng));
        ComplexVector f = dft(in);
        for (auto& v : f) v = std::conj(v);
        ComplexVector back = dft(f);
        double err = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex rec = std::conj(back[k]) / static_cast<double>(n);
            err = std::max(err, std::abs(rec - in[k]));
        }
        CHECK(err <= 1e-13);
    }
}
