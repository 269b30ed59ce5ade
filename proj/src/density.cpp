#include "projclose/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "projclose/errors.hpp"
#include "projclose/parallel.hpp"

namespace projclose {

namespace {

constexpr std::size_t query_chunk = 4096;
constexpr std::size_t row_chunk = 256;

kernels::Block block_of(const PointStore& store, std::size_t begin, std::size_t end) {
    kernels::Block b;
    b.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        const FloatDirection d = unit_direction(store.point(i));
        b.push_back(d[0], d[1], d[2]);
    }
    return b;
}

// Per-query best alignment against `points`, folded into `best`; returns the
// min of the updated entries. Chunks write disjoint slices, so the threaded
// result is exact.
double fold_best_alignment(const kernels::Block& queries, const kernels::Block& points,
                           std::vector<double>& best, int threads) {
    const kernels::Ops& ops = kernels::active_ops();
    const std::size_t nq = queries.size();
    const std::size_t tasks = (nq + query_chunk - 1) / query_chunk;
    std::vector<double> partial_min(tasks, 1.0);
    parallel_tasks(tasks, threads, [&](std::size_t t) {
        const std::size_t q0 = t * query_chunk;
        const std::size_t q1 = std::min(nq, q0 + query_chunk);
        std::vector<double> out(q1 - q0);
        ops.best_alignment(queries, q0, q1, points, out.data());
        double lo = 1.0;
        for (std::size_t q = q0; q < q1; ++q) {
            double& b = best[q];
            if (out[q - q0] > b) b = out[q - q0];
            if (b < lo) lo = b;
        }
        partial_min[t] = lo;
    });
    double lo = 1.0;
    for (double p : partial_min)
        if (p < lo) lo = p;
    return lo;
}

double max_alignment_rows(const kernels::Block& a, std::size_t a_begin, std::size_t a_end,
                          const kernels::Block& b, std::size_t b_end, bool within,
                          int threads) {
    const kernels::Ops& ops = kernels::active_ops();
    if (a_begin >= a_end) return 0.0;
    const std::size_t rows = a_end - a_begin;
    const std::size_t tasks = (rows + row_chunk - 1) / row_chunk;
    std::vector<double> partial(tasks, 0.0);
    parallel_tasks(tasks, threads, [&](std::size_t t) {
        const std::size_t r0 = a_begin + t * row_chunk;
        const std::size_t r1 = std::min(a_end, r0 + row_chunk);
        partial[t] = within ? ops.max_alignment_within(a, r0, r1)
                            : ops.max_alignment_cross(a, r0, r1, b, b_end);
    });
    double hi = 0.0;
    for (double p : partial)
        if (p > hi) hi = p;
    return hi;
}

} // namespace

SphereSample sample_directions(std::uint64_t n) {
    if (n < 1) raise(ErrorKind::invalid_argument, "sample size must be positive");
    SphereSample sample;
    sample.dirs.reserve(n);
    sample.block.reserve(n);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::uint64_t i = 0; i < n; ++i) {
        const double z = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double theta = golden_angle * static_cast<double>(i);
        const FloatDirection d =
            FloatDirection::from(r * std::cos(theta), r * std::sin(theta), z);
        sample.block.push_back(d[0], d[1], d[2]);
        sample.dirs.push_back(d);
    }
    return sample;
}

double covering_radius(const PointStore& store, const SphereSample& sample, int threads) {
    std::vector<double> best(sample.size(), 0.0);
    const kernels::Block pts = block_of(store, 0, store.size());
    const double lo = fold_best_alignment(sample.block, pts, best, threads);
    return kernels::angle_from_alignment(lo);
}

double covering_radius(std::span<const FloatDirection> points, const SphereSample& sample,
                       int threads) {
    kernels::Block pts;
    pts.reserve(points.size());
    for (const FloatDirection& d : points) pts.push_back(d[0], d[1], d[2]);
    std::vector<double> best(sample.size(), 0.0);
    const double lo = fold_best_alignment(sample.block, pts, best, threads);
    return kernels::angle_from_alignment(lo);
}

double min_separation(const PointStore& store, int threads) {
    if (store.size() < 2)
        raise(ErrorKind::too_few_points, "separation needs at least two points");
    const kernels::Block pts = block_of(store, 0, store.size());
    const double hi = max_alignment_rows(pts, 0, pts.size(), pts, 0, true, threads);
    return kernels::angle_from_alignment(hi);
}

DensityRun density_curve(const BasisSpec& basis, const ClosureCaps& caps,
                         std::uint64_t sample_size, int threads) {
    DensityRun run;
    run.closure = run_closure(basis, caps, ClosureOptions{threads, PairStrategy::frontier});
    const PointStore& store = run.closure.store;
    const SphereSample sample = sample_directions(sample_size);
    run.report.sample_size = sample_size;

    // Every level extends the previous one, so per-query bests and the pair
    // maximum fold incrementally; results match the one-shot evaluations
    // bit for bit.
    std::vector<double> best(sample.size(), 0.0);
    kernels::Block pts;
    pts.reserve(store.size());
    double pair_hi = 0.0;
    std::size_t done = 0;
    for (const LevelStat& ls : run.closure.trace.levels) {
        const std::size_t cnt = static_cast<std::size_t>(ls.points);
        for (std::size_t i = done; i < cnt; ++i) {
            const FloatDirection d = unit_direction(store.point(i));
            pts.push_back(d[0], d[1], d[2]);
        }
        kernels::Block fresh;
        fresh.reserve(cnt - done);
        for (std::size_t i = done; i < cnt; ++i)
            fresh.push_back(pts.x[i], pts.y[i], pts.z[i]);

        const double lo = fold_best_alignment(sample.block, fresh, best, threads);
        const double cross_hi = max_alignment_rows(pts, done, cnt, pts, done, false, threads);
        const double within_hi = max_alignment_rows(pts, done, cnt, pts, 0, true, threads);
        pair_hi = std::max({pair_hi, cross_hi, within_hi});

        run.report.levels.push_back(LevelDensity{ls.level, ls.points,
                                                 kernels::angle_from_alignment(lo),
                                                 kernels::angle_from_alignment(pair_hi)});
        done = cnt;
    }
    return run;
}

} // namespace projclose
