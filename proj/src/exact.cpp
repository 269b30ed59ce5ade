#include "projclose/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace projclose {

ExactScalar::ExactScalar(const Int& num, const Int& den) {
    if (sgn(den) == 0) raise(ErrorKind::parse_error, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactScalar ExactScalar::parse(std::string_view text) {
    std::string s(text);
    // strip surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) raise(ErrorKind::parse_error, "empty rational literal");

    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return ExactScalar(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return ExactScalar(num, den);
    } catch (const std::invalid_argument&) {
        raise(ErrorKind::parse_error, "not a rational literal: '" + s + "'");
    }
}

ExactScalar ExactScalar::from_double(double x, double tol) {
    if (!std::isfinite(x)) raise(ErrorKind::parse_error, "non-finite float input");
    const double bound = tol * std::max(1.0, std::fabs(x));
    bool negative = x < 0;
    double r = std::fabs(x);

    // Continued-fraction convergents h_k / k_k of r.
    Int h_prev = 1, h = Int(static_cast<long>(std::floor(r)));
    Int k_prev = 0, k = 1;
    double frac = r - std::floor(r);
    for (int it = 0; it < 64; ++it) {
        ExactScalar approx(negative ? Int(-h) : h, k);
        if (std::fabs(approx.to_double() - x) <= bound) return approx;
        if (frac <= 0) break;
        r = 1.0 / frac;
        double a = std::floor(r);
        frac = r - a;
        Int ai(a);
        Int h_next = ai * h + h_prev;
        Int k_next = ai * k + k_prev;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
    }
    return ExactScalar(negative ? Int(-h) : h, k);
}

std::string ExactScalar::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace projclose
