#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "shipwave/point.hpp"

namespace shipwave::cc {

// Rotation of the integration ray into the complex plane. sign(z) * theta lies
// in [0, pi/4]; for z > 0 the interval is split at t_split and only the tail
// is rotated, otherwise t_split = 0 and the whole ray is rotated.
struct ContourPlan {
    double theta = 0.0;
    double cos_theta = 1.0;
    double sin_theta = 0.0;
    double t_split = 0.0;
    bool split = false;
};

// Steepest-descent rotation angle for the quadratic part of the phase:
// cos(theta) = sqrt((1 + |y|/r) / 2), sin(theta) = sign(z) sqrt((1 - |y|/r) / 2)
// with r = sqrt(y^2 + z^2). Throws at y = z = 0.
double steepest_descent_angle(double y, double z);

// Split point t* = |x| sin(theta) / (2 (|y| cos(theta) + z sin(theta)));
// requires z > 0.
double contour_split_point(const FieldPoint& p);

ContourPlan plan_contour(const FieldPoint& p);

// Clenshaw-Curtis weights for n+1 nodes cos(k pi / n), k = 0..n (n even),
// built from the DFT of the kappa vector. Symmetric, and sums to 2.
struct Weights {
    int n = 0;
    std::vector<double> w;
};

Weights weights(int n);
std::shared_ptr<const Weights> shared_weights(int n);

// Quadrature nodes cos(k pi / n), k = 0..n, exactly antisymmetric.
std::vector<double> nodes(int n);

// Plain quadrature application sum_k w_k f(t_k) on [-1,1].
Complex apply(const Weights& w, const std::function<Complex(double)>& f);

struct Result {
    Complex value{0.0, 0.0};
    long long eval_count = 0;
    int level = 0;          // max termination level over the evaluated integrals
    bool converged = false;
    int level_finite = -1;  // termination level of the finite piece (-1 if none)
    int level_tail = -1;    // termination level of the rotated tail
    double max_phase_re = 0.0;  // largest Re of the phase seen at any node
};

struct Caps {
    // per-integral cap on integrand evaluations (node count of the last level)
    long long max_evals_per_integral = (1LL << 19) + 1;
};

// Wave integral over the rotated contour, iterated with n_l = 2^l * 2 node
// intervals until the last three approximations form a Cauchy cluster within
// eps (reserve factor 10 on the last difference). Requires x <= 0, y <= 0 and
// y^2 + z^2 != 0. Non-convergence within the cap is reported, not thrown.
Result integrate(const FieldPoint& p, double eps, const Caps& caps = {});

// Same contour and termination with the directional-derivative weight
// phase(t, l1, l2, l3) multiplying the exponential.
Result integrate_weighted(const FieldPoint& p, const Direction& d, double eps,
                          const Caps& caps = {});

}  // namespace shipwave::cc
