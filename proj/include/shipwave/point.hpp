#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace shipwave {

using Complex = std::complex<double>;

// Evaluation point in the source-fixed frame, dimensionless (nu = 1) units.
// x is the streamwise coordinate (x <= 0 behind the source), y the vertical
// coordinate (y <= 0, already including the source depth where applicable),
// z the transverse coordinate.
struct FieldPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Direction vector for directional derivatives of the wave integral.
struct Direction {
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;
};

// The half-line y = 0, z = 0, x < 0 is a line of essential singularities of
// the wave integral; requests on it are rejected with this error.
class track_singularity_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

inline bool is_finite(const FieldPoint& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

inline bool is_finite(const Direction& d) {
    return std::isfinite(d.l1) && std::isfinite(d.l2) && std::isfinite(d.l3);
}

inline bool is_zero(const Direction& d) {
    return d.l1 == 0.0 && d.l2 == 0.0 && d.l3 == 0.0;
}

// Difficulty measure D = x^2 / (4 sqrt(y^2 + z^2)); grows without bound when
// the point approaches the source track. Undefined (throws) at y = z = 0.
inline double difficulty_parameter(const FieldPoint& p) {
    const double rho = std::hypot(p.y, p.z);
    if (rho == 0.0)
        throw std::domain_error("difficulty_parameter: undefined at y = z = 0");
    return p.x * p.x / (4.0 * rho);
}

// Phase of the wave integrand: varpi(t; a, b, c) = b (1 + t^2) + i (a + c t) sqrt(1 + t^2).
// The integral's phase is phase(t, x, y, z); the directional-derivative weight is
// phase(t, l1, l2, l3). Principal branch of the square root (Re(1 + t^2) > 0 on
// every contour used here).
inline Complex phase(Complex t, double a, double b, double c) {
    const Complex s = std::sqrt(1.0 + t * t);
    return b * (1.0 + t * t) + Complex(0.0, 1.0) * (a + c * t) * s;
}

inline Complex phase(Complex t, const FieldPoint& p) { return phase(t, p.x, p.y, p.z); }
inline Complex phase(Complex t, const Direction& d) { return phase(t, d.l1, d.l2, d.l3); }

}  // namespace shipwave
