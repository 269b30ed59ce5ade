#pragma once

#include <array>

#include "projclose/hpoint.hpp"

namespace projclose {

/// Unit vector in binary64, |norm - 1| <= 1e-12.
struct FloatDirection {
    std::array<double, 3> v;

    /// Normalizes (x, y, z). Throws zero_vector on a zero or non-finite input.
    static FloatDirection from(double x, double y, double z);

    double operator[](std::size_t i) const { return v[i]; }
};

/// Binary64 unit vector on the ray of p. Scales by the largest coordinate
/// before converting, so huge exact coordinates cannot overflow.
FloatDirection unit_direction(const HPoint& p);

/// Elliptic distance arccos(|a.b| / (|a||b|)) in [0, pi/2].
double elliptic_distance(const FloatDirection& a, const FloatDirection& b);
double elliptic_distance(const HPoint& p, const HPoint& q);

} // namespace projclose
