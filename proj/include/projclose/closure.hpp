#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "projclose/point_store.hpp"

namespace projclose {

/// Three rational vectors expected to form a basis of R^3.
struct BasisSpec {
    RationalTriple u, v, w;
};

/// Canonicalizes the basis and rejects duplicates and collinear triples.
/// Throws invalid_basis.
std::array<HPoint, 3> validate_basis(const BasisSpec& basis);

struct ClosureCaps {
    int max_level = 6;
    std::uint64_t max_points = 100000;
};

enum class CapHit { none, level_cap, point_cap };

struct LevelStat {
    int level;
    std::uint64_t points;      // cumulative
    std::uint64_t new_points;  // added at this level
    double ms;                 // wall time spent generating the level
};

struct ClosureTrace {
    std::vector<LevelStat> levels;
    bool stabilized = false;
    CapHit cap_hit = CapHit::none;
};

/// True iff the final level added nothing and no cap interfered.
bool is_stabilized(const ClosureTrace& trace);

enum class PairStrategy {
    frontier,   // new x all; equivalent to all_pairs because old x old
                // products were inserted at earlier levels
    all_pairs,
};

struct ClosureOptions {
    int threads = 1;
    PairStrategy strategy = PairStrategy::frontier;
};

struct ClosureResult {
    PointStore store;
    ClosureTrace trace;
};

/// Iterates V_{i+1} = V_i  u  {r x s | r, s in V_i, r x s != o} projectively
/// from the basis until stabilization, the level cap, or the point cap.
ClosureResult run_closure(const BasisSpec& basis, const ClosureCaps& caps = {},
                          const ClosureOptions& opts = {});

/// One closure step over every unordered pair of distinct stored points.
/// Throws point_cap_exceeded if the enlarged store would pass max_points.
PointStore next_level(const PointStore& store,
                      std::uint64_t max_points = std::numeric_limits<std::uint64_t>::max());

} // namespace projclose
