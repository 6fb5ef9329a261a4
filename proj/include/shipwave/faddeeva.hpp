#pragma once

#include <complex>

namespace shipwave {

// Faddeeva function w(eta) = exp(-eta^2) erfc(-i eta).
//
// Region-split evaluation (power series / Taylor recurrence / Laplace continued
// fraction) with a compensated reflection into the lower half-plane. Relative
// accuracy is about 1e-13 or better for |eta| <= 1e8 with Im(eta) >= -30.
//
// Throws std::domain_error deep in the lower half-plane (Im(eta) < -30, or
// wherever the reflection term 2 exp(-eta^2) would overflow).
std::complex<double> faddeeva_w(std::complex<double> eta);

// Complementary error function of a complex argument,
// erfc(zeta) = exp(-zeta^2) w(i zeta) for Re(zeta) >= 0, extended by the
// reflection erfc(-zeta) = 2 - erfc(zeta). Relative accuracy about 1e-13
// for |zeta| <= 26. Throws std::overflow_error when exp(-zeta^2) overflows.
std::complex<double> erfc_complex(std::complex<double> zeta);

}  // namespace shipwave
