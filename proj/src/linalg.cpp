#include "shipwave/linalg.hpp"

#include <cmath>
#include <limits>

namespace shipwave {

namespace {

// c -= l * b without routing through the library's checked complex multiply;
// this keeps the elimination loop vectorizable.
inline void sub_mul(Complex& c, const Complex l, const Complex b) {
    const double re = c.real() - (l.real() * b.real() - l.imag() * b.imag());
    const double im = c.imag() - (l.real() * b.imag() + l.imag() * b.real());
    c = {re, im};
}

}  // namespace

ComplexVector lu_solve(ComplexMatrix a, ComplexVector b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("lu_solve: matrix must be square");
    if (b.size() != n) throw std::invalid_argument("lu_solve: dimension mismatch");

    double amax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex& v = a(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument("lu_solve: non-finite matrix entry");
            amax = std::max(amax, std::abs(v));
        }
    for (const Complex& v : b)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("lu_solve: non-finite right-hand side");

    const double tiny =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * amax;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(a(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best <= tiny)
            throw singular_matrix_error("lu_solve: matrix is singular to working precision");
        if (piv != k) {
            Complex* rk = a.row(k);
            Complex* rp = a.row(piv);
            for (std::size_t j = 0; j < n; ++j) std::swap(rk[j], rp[j]);
            std::swap(b[k], b[piv]);
        }
        const Complex pivot = a(k, k);
        const Complex* rk = a.row(k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex* ri = a.row(i);
            if (ri[k] == Complex(0.0, 0.0)) continue;
            const Complex l = ri[k] / pivot;
            ri[k] = l;
            for (std::size_t j = k + 1; j < n; ++j) sub_mul(ri[j], l, rk[j]);
            sub_mul(b[i], l, b[k]);
        }
    }

    // back substitution
    for (std::size_t ii = n; ii-- > 0;) {
        const Complex* ri = a.row(ii);
        Complex s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) sub_mul(s, ri[j], b[j]);
        b[ii] = s / ri[ii];
    }
    return b;
}

}  // namespace shipwave
