#pragma once

#include <vector>

#include "shipwave/chebyshev.hpp"
#include "shipwave/linalg.hpp"
#include "shipwave/point.hpp"

namespace shipwave::levin {

// Laurent coefficients of the phase-primitive expansion at the right endpoint:
// c2 / (tau-1)^2 + c1 / (tau-1) + c0 with c2 = -y - i z, c1 = i x - 2 y - 2 i z,
// c0 = i x - 3 i z / 2. Requires |y + i z| != 0 (c2 != 0).
struct EndpointCoeffs {
    Complex c2, c1, c0;
};

EndpointCoeffs endpoint_coeffs(const FieldPoint& p);

// Coefficient sigma(tau) multiplying the unknown in the collocation ODE
// (1-tau)^3 F' + [sigma(tau) - (1-tau)^2] F = 1 on [0,1].
Complex ode_coeff(double tau, const FieldPoint& p);

// Value of the bounded ODE solution at tau = 1: 1 / (2 (y + i z)).
// Throws for the degenerate point y = z = 0.
Complex boundary_value(const FieldPoint& p);

// Collocation matrix of the ODE on the given Chebyshev grid. quad_sign is the
// sign of the (1-tau)^2 diagonal term: -1 for the value problem above, +1 for
// the directional-derivative problem.
ComplexMatrix collocation_matrix(const FieldPoint& p, const ChebyshevGrid& grid,
                                 double quad_sign = -1.0);

// Correction term absorbing the sharp peak of the solution near tau = 1
// (Faddeeva form). Defined for tau in [0,1); its limit at 1 is boundary_value.
Complex correction_term(double tau, const FieldPoint& p);

// Image of the correction term under the ODE operator. Equals
// 1 + [2 c2 + c1 (tau-1) + sigma(tau)] * correction_term(tau), and exactly 1
// at tau = 1 (the bracket vanishes there while the correction stays bounded).
Complex correction_image(double tau, const FieldPoint& p);

struct Result {
    int order = 0;
    // Polynomial part of the solution at the second-kind nodes. For a
    // corrected solve the full solution is node value + correction term.
    ComplexVector node_values;
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;  // 0 when estimation was skipped
    bool corrected = false;
};

// Collocation solve with the plain polynomial ansatz; value = -Phi(0) e^{y+ix}.
Result solve_plain(const FieldPoint& p, int order, bool with_error_estimate = true);

// Collocation solve with the correction term split off;
// value = -(Phi(0) + correction_term(0)) e^{y+ix}.
Result solve_corrected(const FieldPoint& p, int order, bool with_error_estimate = true);

// Residual-based error estimate: the ODE residual is sampled at the first-kind
// nodes interleaving the collocation grid, the residual equation is solved
// there, and the estimate is e^y min{ ||R||_inf, (1/2) sqrt(pi/|y|) ||r||_inf }
// (the ||R||_inf branch alone when y = 0).
double error_estimate(const FieldPoint& p, const Result& result);

// True when the default engine configuration should split off the correction
// term: y = 0 and the peak location (2z - x + sqrt(x^2 - 8 z^2)) / (6z - 2x)
// exists and exceeds 0.9.
bool correction_recommended(const FieldPoint& p);

struct AutoOptions {
    double tol = 1e-12;
    int order_start = 50;
    int order_max = 1600;
    bool corrected = false;
};

// Doubles the order until the error estimate drops below tol or order_max is
// reached; returns the last result.
Result solve_auto(const FieldPoint& p, const AutoOptions& opts);

}  // namespace shipwave::levin
