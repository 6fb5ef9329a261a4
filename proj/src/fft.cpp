#include "shipwave/fft.hpp"

#include <cmath>
#include <numbers>

namespace shipwave {

namespace {

void check_finite(const ComplexVector& u) {
    for (const Complex& v : u)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("dft: non-finite input entry");
}

ComplexVector dft_radix2(ComplexVector a) {
    const std::size_t n = a.size();
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::size_t half = len / 2;
        std::vector<Complex> tw(half);
        for (std::size_t j = 0; j < half; ++j)
            tw[j] = std::polar(1.0, ang * static_cast<double>(j));
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const Complex u = a[i + j];
                const Complex w = tw[j];
                const Complex t(w.real() * a[i + j + half].real() -
                                    w.imag() * a[i + j + half].imag(),
                                w.real() * a[i + j + half].imag() +
                                    w.imag() * a[i + j + half].real());
                a[i + j] = u + t;
                a[i + j + half] = u - t;
            }
        }
    }
    return a;
}

ComplexVector dft_direct(const ComplexVector& u) {
    const std::size_t n = u.size();
    ComplexVector out(n);
    const double base = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex s(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            // exact modular reduction of k*m keeps the twiddle angle accurate
            const std::size_t r = (k * m) % n;
            s += u[m] * std::polar(1.0, base * static_cast<double>(r));
        }
        out[k] = s;
    }
    return out;
}

}  // namespace

ComplexVector dft(const ComplexVector& u) {
    if (u.empty()) throw std::invalid_argument("dft: empty input");
    check_finite(u);
    const std::size_t n = u.size();
    if ((n & (n - 1)) == 0) return dft_radix2(u);
    return dft_direct(u);
}

}  // namespace shipwave
