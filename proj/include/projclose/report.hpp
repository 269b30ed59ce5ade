#pragma once

#include <array>
#include <optional>
#include <string>

#include "projclose/closure.hpp"

namespace projclose::cli {

enum class Command { closure, classify, density, verify, moebius };
enum class OutputFormat { json, csv };

Command parse_command(const std::string& name);
const char* to_string(Command c);
const char* to_string(OutputFormat f);

/// Parses one rational coordinate: "p/q", an integer, or (only with
/// approx_floats) a float literal approximated by continued fractions.
/// Float approximations are reported through *warning when given.
ExactScalar parse_coordinate(const std::string& text, bool approx_floats,
                             std::string* warning = nullptr);

/// "x1,x2,x3;y1,y2,y3;z1,z2,z3" with rational entries.
BasisSpec parse_basis(const std::string& text, bool approx_floats,
                      std::string* warning = nullptr);

/// Four semicolon-separated triples.
std::array<RationalTriple, 4> parse_quadrangle(const std::string& text, bool approx_floats,
                                               std::string* warning = nullptr);

struct RunConfig {
    Command command = Command::classify;
    std::optional<BasisSpec> basis;
    std::optional<std::array<RationalTriple, 4>> quadrangle;
    ClosureCaps caps;
    std::uint64_t samples = 10000;  // density sample size / axiom budget
    std::uint64_t seed = 0;
    std::string output;             // empty: report to stdout, no CSV
    OutputFormat format = OutputFormat::json;
    bool approx_floats = false;
    bool include_timings = false;   // per-level ms is off by default so
                                    // identical configs give identical bytes
    int threads = 1;                // execution knob; never serialized
};

/// Executes the configured pipeline and writes the report (and, for
/// closure/density/moebius, the canonical-point CSV). Returns the process
/// exit code: 0 ok, 2 invalid input, 3 point-cap abort.
int run(const RunConfig& config);

} // namespace projclose::cli
