#pragma once

#include "shipwave/clenshaw_curtis.hpp"
#include "shipwave/levin.hpp"
#include "shipwave/point.hpp"

namespace shipwave {

// Directional derivative J(l) = grad I . l by the contour-rotation quadrature:
// the contour and termination rule of cc::integrate with the weight
// phase(t, l1, l2, l3) under the integral sign.
cc::Result deriv_cc(const FieldPoint& p, const Direction& d, double eps,
                    const cc::Caps& caps = {});

// Right-hand side of the derivative collocation ODE,
// (1-tau)^3 F' + [sigma(tau) + (1-tau)^2] F = rhs(tau); equals l2 + i l3 at
// tau = 1.
Complex deriv_ode_rhs(double tau, const Direction& d);

// Correction term for the derivative problem and its image under the
// derivative ODE operator (tau in [0,1); the image is l2 + i l3 at tau = 1).
Complex deriv_correction_term(double tau, const FieldPoint& p, const Direction& d);
Complex deriv_correction_image(double tau, const FieldPoint& p, const Direction& d);

// Directional derivative by collocation; requires y < 0.
// J = -(Phi(0) [+ correction(0)]) e^{y + i x}; the endpoint value of the full
// solution is (l2 + i l3) / (2 (y + i z)).
levin::Result deriv_levin(const FieldPoint& p, const Direction& d, int order,
                          bool corrected = false, bool with_error_estimate = true);

// Residual-based estimate for a deriv_levin result (same machinery as the
// value problem, with the derivative operator and right-hand side).
double deriv_error_estimate(const FieldPoint& p, const Direction& d,
                            const levin::Result& result);

}  // namespace shipwave
