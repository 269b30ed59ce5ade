#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

#include "projclose/errors.hpp"

namespace projclose {

using Int = mpz_class;

/// Arbitrary-precision rational, always reduced with positive denominator.
class ExactScalar {
public:
    ExactScalar() : q_(0) {}
    ExactScalar(long n) : q_(n) {}
    explicit ExactScalar(const Int& n) : q_(n) {}
    ExactScalar(const Int& num, const Int& den);

    /// Parses "p/q" or a plain integer string. Throws parse_error.
    static ExactScalar parse(std::string_view text);

    /// Nearest continued-fraction convergent with |p/q - x| <= tol * max(1, |x|).
    static ExactScalar from_double(double x, double tol = 1e-12);

    Int numerator() const { return q_.get_num(); }
    Int denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    double to_double() const { return q_.get_d(); }
    std::string str() const;

    const mpq_class& raw() const { return q_; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.q_ == b.q_;
    }
    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.q_ + b.q_));
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.q_ - b.q_));
    }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.q_ * b.q_));
    }

private:
    explicit ExactScalar(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

using RationalTriple = std::array<ExactScalar, 3>;

inline RationalTriple rational_triple(long a, long b, long c) {
    return {ExactScalar(a), ExactScalar(b), ExactScalar(c)};
}

} // namespace projclose
