#include "projclose/metric.hpp"

#include <cmath>

namespace projclose {

namespace {

inline double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return (a[0] * b[0] + a[1] * b[1]) + a[2] * b[2];
}

} // namespace

FloatDirection FloatDirection::from(double x, double y, double z) {
    std::array<double, 3> v{x, y, z};
    double n = std::sqrt(dot3(v, v));
    if (n == 0.0 || !std::isfinite(n)) {
        raise(ErrorKind::zero_vector, "direction must be a nonzero finite vector");
    }
    return FloatDirection{{x / n, y / n, z / n}};
}

FloatDirection unit_direction(const HPoint& p) {
    Int m;
    mpz_abs(m.get_mpz_t(), p.x1().get_mpz_t());
    for (const Int* c : {&p.x2(), &p.x3()}) {
        Int a;
        mpz_abs(a.get_mpz_t(), c->get_mpz_t());
        if (a > m) m = a;
    }
    std::array<double, 3> v;
    mpq_t q;
    mpq_init(q);
    for (std::size_t i = 0; i < 3; ++i) {
        mpq_set_num(q, p.coords()[i].get_mpz_t());
        mpq_set_den(q, m.get_mpz_t());
        v[i] = mpq_get_d(q);
    }
    mpq_clear(q);
    return FloatDirection::from(v[0], v[1], v[2]);
}

double elliptic_distance(const FloatDirection& a, const FloatDirection& b) {
    // With identical (or negated) inputs the ratio is exactly 1, so the
    // distance is exactly 0: sqrt(s*s) == s holds in round-to-nearest.
    double num = std::fabs(dot3(a.v, b.v));
    double den = std::sqrt(dot3(a.v, a.v) * dot3(b.v, b.v));
    double c = num / den;
    if (c > 1.0) c = 1.0;
    return std::acos(c);
}

double elliptic_distance(const HPoint& p, const HPoint& q) {
    return elliptic_distance(unit_direction(p), unit_direction(q));
}

} // namespace projclose
