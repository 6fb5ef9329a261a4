#pragma once

#include <optional>
#include <vector>

#include "shipwave/clenshaw_curtis.hpp"
#include "shipwave/levin.hpp"
#include "shipwave/point.hpp"

namespace shipwave {

enum class Method { automatic, levin, levin_plain, cc, closed_form };

const char* method_name(Method m);

struct EvalConfig {
    Method method = Method::automatic;
    double eps = 1e-10;      // quadrature tolerance / collocation doubling target
    int levin_order = 100;   // collocation order when doubling is off
    bool levin_doubling = true;
    int levin_order_max = 1600;
    // override for the plain/corrected collocation ansatz; unset picks the
    // corrected form only where the solution peaks near the endpoint
    std::optional<bool> levin_corrected;
    // automatic dispatch: collocation when y <= auto_y_max and the difficulty
    // parameter D <= auto_d_max, contour quadrature otherwise
    double auto_y_max = -0.05;
    double auto_d_max = 40.0;
    cc::Caps caps;
};

struct EvalReport {
    Complex value{0.0, 0.0};
    Method method_used = Method::automatic;
    double error_estimate = 0.0;
    long long eval_count = 0;
    double d_param = 0.0;  // x^2 / (4 sqrt(y^2 + z^2))
    double theta = 0.0;    // contour rotation angle
    std::vector<double> critical_points;
    bool converged = true;
};

// Closed form of the wave integral on the axis x = z = 0:
// I(0, y, 0) = (sqrt(pi)/2) e^y / sqrt(-y). Requires y < 0.
double closed_form_axis(double y);

// Stationary points of the oscillatory phase, present for z > 0 and
// x <= -2 sqrt(2) z: t = -x/(4z) -+ sqrt((x/(4z))^2 - 1/2) (one merged point
// on the wedge boundary, none inside).
std::vector<double> critical_points(const FieldPoint& p);

// Wave integral I(x,y,z) with domain validation and engine dispatch.
// Requires x <= 0 and y <= 0; the source track y = z = 0, x < 0 is rejected
// with track_singularity_error; x = z = 0 goes through the closed form.
EvalReport eval_I(const FieldPoint& p, const EvalConfig& cfg = {});

// Wavelike term I_inf(x, y, z) = (1/pi) H(-x) Im{ I(x,y,z) + I(x,y,-z) },
// with y the combined vertical coordinate (field plus source depth).
// H(0) is taken as 0, so the result is exactly 0 for x >= 0. The value is
// real and stored in the real part of the report value.
EvalReport eval_I_infinity(double x, double y_sum, double z, const EvalConfig& cfg = {});

}  // namespace shipwave
