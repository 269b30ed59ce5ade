#include "projclose/hpoint.hpp"

namespace projclose {

namespace {

int cmp(const Int& a, const Int& b) { return mpz_cmp(a.get_mpz_t(), b.get_mpz_t()); }

std::size_t hash_mpz(const Int& z, std::size_t seed) {
    std::size_t h = seed;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mpz_srcptr p = z.get_mpz_t();
    mix(static_cast<std::size_t>(mpz_sgn(p)) + 2);
    const std::size_t n = mpz_size(p);
    for (std::size_t i = 0; i < n; ++i) mix(static_cast<std::size_t>(mpz_getlimbn(p, i)));
    return h;
}

} // namespace

HPoint canonicalize(IntTriple v) {
    Int g;
    mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[2].get_mpz_t());
    if (sgn(g) == 0) raise(ErrorKind::zero_vector, "cannot canonicalize the zero vector");
    if (g != 1) {
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    for (const auto& c : v) {
        int s = sgn(c);
        if (s == 0) continue;
        if (s < 0) {
            for (auto& d : v) d = -d;
        }
        break;
    }
    return HPoint(std::move(v));
}

HPoint canonicalize(const RationalTriple& v) {
    Int l;
    mpz_lcm(l.get_mpz_t(), v[0].denominator().get_mpz_t(), v[1].denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[2].denominator().get_mpz_t());
    IntTriple scaled;
    for (std::size_t i = 0; i < 3; ++i) {
        scaled[i] = v[i].numerator() * (l / v[i].denominator());
    }
    return canonicalize(std::move(scaled));
}

std::string HPoint::str() const {
    return c_[0].get_str() + "," + c_[1].get_str() + "," + c_[2].get_str();
}

bool operator<(const HPoint& a, const HPoint& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::size_t HPointHash::operator()(const HPoint& p) const {
    std::size_t h = 0x243f6a8885a308d3ull;
    for (const auto& c : p.coords()) h = hash_mpz(c, h);
    return h;
}

IntTriple cross_raw(const IntTriple& a, const IntTriple& b) {
    return {Int(a[1] * b[2] - a[2] * b[1]),
            Int(a[2] * b[0] - a[0] * b[2]),
            Int(a[0] * b[1] - a[1] * b[0])};
}

Int dot_raw(const IntTriple& a, const IntTriple& b) {
    return Int(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

Int det3_raw(const IntTriple& a, const IntTriple& b, const IntTriple& c) {
    return dot_raw(a, cross_raw(b, c));
}

bool is_zero_triple(const IntTriple& v) {
    return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0;
}

IntTriple cross(const HPoint& a, const HPoint& b) {
    return cross_raw(a.coords(), b.coords());
}

HLine join(const HPoint& p, const HPoint& q) {
    IntTriple c = cross(p, q);
    if (is_zero_triple(c)) raise(ErrorKind::equal_points, "join of equal points " + p.str());
    return HLine(canonicalize(std::move(c)));
}

HPoint meet(const HLine& l1, const HLine& l2) {
    IntTriple c = cross(l1.normal(), l2.normal());
    if (is_zero_triple(c)) {
        raise(ErrorKind::equal_lines, "meet of equal lines with normal " + l1.normal().str());
    }
    return canonicalize(std::move(c));
}

bool incident(const HPoint& p, const HLine& l) {
    return sgn(dot_raw(p.coords(), l.normal().coords())) == 0;
}

bool collinear(const HPoint& p, const HPoint& q, const HPoint& r) {
    return sgn(det3_raw(p.coords(), q.coords(), r.coords())) == 0;
}

IntTriple quadruple_product(const HPoint& p1, const HPoint& q1,
                            const HPoint& p2, const HPoint& q2) {
    return cross_raw(cross(p1, q1), cross(p2, q2));
}

namespace {

IntTriple scaled_difference(const Int& ca, const IntTriple& a, const Int& cb, const IntTriple& b) {
    return {Int(ca * a[0] - cb * b[0]),
            Int(ca * a[1] - cb * b[1]),
            Int(ca * a[2] - cb * b[2])};
}

} // namespace

QuadrupleProduct quadruple_product_expansions(const HPoint& p1, const HPoint& q1,
                                              const HPoint& p2, const HPoint& q2) {
    const IntTriple& a = p1.coords();
    const IntTriple& b = q1.coords();
    const IntTriple& c = p2.coords();
    const IntTriple& d = q2.coords();
    QuadrupleProduct out;
    out.direct = quadruple_product(p1, q1, p2, q2);
    out.span_second = scaled_difference(det3_raw(a, b, d), c, det3_raw(a, b, c), d);
    out.span_first = scaled_difference(det3_raw(a, c, d), b, det3_raw(b, c, d), a);
    return out;
}

} // namespace projclose
