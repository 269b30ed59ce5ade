#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "projclose/closure.hpp"
#include "projclose/kernels.hpp"
#include "projclose/metric.hpp"

namespace projclose {

/// Deterministic Fibonacci-lattice directions on the upper hemisphere,
/// one representative per projective direction.
struct SphereSample {
    std::vector<FloatDirection> dirs;
    kernels::Block block;

    std::size_t size() const { return dirs.size(); }
};

SphereSample sample_directions(std::uint64_t n);

/// Max over sample directions of the min elliptic distance to the stored
/// points, in radians.
double covering_radius(const PointStore& store, const SphereSample& sample,
                       int threads = 1);
double covering_radius(std::span<const FloatDirection> points, const SphereSample& sample,
                       int threads = 1);

/// Min pairwise elliptic distance of the store. Throws too_few_points.
double min_separation(const PointStore& store, int threads = 1);

struct LevelDensity {
    int level;
    std::uint64_t points;
    double covering_radius;
    double min_separation;
};

struct DensityReport {
    std::uint64_t sample_size = 0;
    std::vector<LevelDensity> levels;
};

struct DensityRun {
    ClosureResult closure;
    DensityReport report;
};

/// Runs the closure and evaluates covering radius and min separation after
/// every completed level.
DensityRun density_curve(const BasisSpec& basis, const ClosureCaps& caps,
                         std::uint64_t sample_size, int threads = 1);

} // namespace projclose
