#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "projclose/exact.hpp"

namespace projclose {

using IntTriple = std::array<Int, 3>;

/// A point of the real projective plane stored as the canonical integer
/// representative of its ray: coprime coordinates, first nonzero positive.
class HPoint {
public:
    const Int& x1() const { return c_[0]; }
    const Int& x2() const { return c_[1]; }
    const Int& x3() const { return c_[2]; }
    const IntTriple& coords() const { return c_; }

    std::string str() const;

    friend bool operator==(const HPoint& a, const HPoint& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
    }
    friend bool operator<(const HPoint& a, const HPoint& b);

private:
    explicit HPoint(IntTriple c) : c_(std::move(c)) {}
    friend HPoint canonicalize(IntTriple v);

    IntTriple c_;
};

/// Canonical representative of the ray through v. Throws zero_vector.
HPoint canonicalize(IntTriple v);
/// Clears denominators first, then canonicalizes.
HPoint canonicalize(const RationalTriple& v);

struct HPointHash {
    std::size_t operator()(const HPoint& p) const;
};

/// A line, stored by the canonical normal of the plane it spans (its pole).
class HLine {
public:
    explicit HLine(HPoint normal) : normal_(std::move(normal)) {}
    const HPoint& normal() const { return normal_; }

    friend bool operator==(const HLine& a, const HLine& b) {
        return a.normal_ == b.normal_;
    }

private:
    HPoint normal_;
};

struct HLineHash {
    std::size_t operator()(const HLine& l) const {
        return HPointHash{}(l.normal());
    }
};

// Exact triple arithmetic on raw integer vectors.
IntTriple cross_raw(const IntTriple& a, const IntTriple& b);
Int dot_raw(const IntTriple& a, const IntTriple& b);
Int det3_raw(const IntTriple& a, const IntTriple& b, const IntTriple& c);
bool is_zero_triple(const IntTriple& v);

/// Componentwise cross product of canonical coordinates. The zero triple
/// signals projectively equal inputs.
IntTriple cross(const HPoint& a, const HPoint& b);

/// Line through two distinct points: (a x b)^perp. Throws equal_points.
HLine join(const HPoint& p, const HPoint& q);

/// Common point of two distinct lines. Throws equal_lines.
HPoint meet(const HLine& l1, const HLine& l2);

inline HLine polar(const HPoint& p) { return HLine(p); }
inline HPoint pole(const HLine& l) { return l.normal(); }

bool incident(const HPoint& p, const HLine& l);
bool collinear(const HPoint& p, const HPoint& q, const HPoint& r);

/// (p1 x q1) x (p2 x q2), exact.
IntTriple quadruple_product(const HPoint& p1, const HPoint& q1,
                            const HPoint& p2, const HPoint& q2);

/// The same product with its two determinant expansions, one in the span of
/// each factor pair. All three agree on every input.
struct QuadrupleProduct {
    IntTriple direct;
    IntTriple span_second;  // det(p1,q1,q2) p2 - det(p1,q1,p2) q2
    IntTriple span_first;   // det(p1,p2,q2) q1 - det(q1,p2,q2) p1
};

QuadrupleProduct quadruple_product_expansions(const HPoint& p1, const HPoint& q1,
                                              const HPoint& p2, const HPoint& q2);

} // namespace projclose
