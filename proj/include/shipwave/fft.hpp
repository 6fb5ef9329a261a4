#pragma once

#include "shipwave/linalg.hpp"

namespace shipwave {

// Discrete Fourier transform, U_k = sum_n u_n exp(-i 2 pi k n / N), no 1/N
// scaling. Power-of-two lengths go through an iterative radix-2 transform
// with bit reversal; other lengths fall back to direct summation.
ComplexVector dft(const ComplexVector& u);

}  // namespace shipwave
