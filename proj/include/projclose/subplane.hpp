#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "projclose/closure.hpp"

namespace projclose {

enum class SubplaneKind {
    degenerate_tripod,      // mutually orthogonal basis; closure has 3 points
    degenerate_five_point,  // one vector orthogonal to the other two; 5 points
    dense_infinite,         // no vector orthogonal to the remaining ones
};

struct Classification {
    SubplaneKind kind;
    /// Index of the basis vector orthogonal to the other two, for the
    /// degenerate kinds. The tripod reports the smallest index.
    std::optional<int> witness;
};

const char* to_string(SubplaneKind kind);

/// Decides degeneracy by the three exact pairwise dot products.
Classification classify_basis(const BasisSpec& basis);

struct AxiomReport {
    std::uint64_t p1_checked = 0;
    std::uint64_t p1_failures = 0;
    std::uint64_t p2_checked = 0;
    std::uint64_t p2_failures = 0;  // asserted misses (stabilized stores only)
    std::uint64_t p2_open = 0;      // misses on capped stores; not errors
    bool p3_found = false;
    std::optional<std::array<HPoint, 4>> p3_witness;
    std::uint64_t ortho_checked = 0;
    std::uint64_t ortho_failures = 0;
};

/// Samples point pairs (P1) and line pairs (P2) with a seeded generator and
/// searches for a quadrangle (P3). Includes the ortho-closure counts.
AxiomReport verify_axioms(const PointStore& store, std::uint64_t sample_budget,
                          std::uint64_t seed);

struct OrthoResult {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
};

/// For every point with level <= last completed level - 1, verifies that at
/// least two stored points lie on its polar. Deeper points are skipped: their
/// witnesses live one level above them.
OrthoResult verify_ortho_closed(const PointStore& store);

enum class DegenerateShape { collinear_set, line_plus_point, not_degenerate };

struct ShapeDescriptor {
    DegenerateShape kind;
    std::optional<HLine> line;   // the common line, when one exists
    std::optional<HPoint> apex;  // the point off the line, for line_plus_point
};

/// Matches a stabilized store against the degenerate-subplane taxonomy:
/// all points collinear, or all but one on a common line. Ties for the apex
/// go to the lexicographically smallest point. Throws not_stabilized.
ShapeDescriptor detect_degenerate_shape(const PointStore& store);

struct MoebiusResult {
    PointStore store;
    ClosureTrace trace;  // one entry per completed round
};

/// Recursive quadrangle construction: each round joins all point pairs and
/// adds every meet of two distinct lines. Rounds that would pass the point
/// cap are discarded whole. Throws not_a_quadrangle.
MoebiusResult run_moebius(const std::array<RationalTriple, 4>& quadrangle,
                          int rounds, const ClosureCaps& caps = {});

PointStore moebius_net(const std::array<HPoint, 4>& quadrangle, int rounds,
                       const ClosureCaps& caps = {});

} // namespace projclose
