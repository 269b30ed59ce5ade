#pragma once

#include <stdexcept>
#include <string>

namespace projclose {

enum class ErrorKind {
    zero_vector,
    equal_points,
    equal_lines,
    invalid_basis,
    point_cap_exceeded,
    not_stabilized,
    not_a_quadrangle,
    too_few_points,
    parse_error,
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace projclose
