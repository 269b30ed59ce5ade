#include "projclose/closure.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_set>
#include <utility>

#include "projclose/errors.hpp"
#include "projclose/parallel.hpp"

namespace projclose {

namespace {

HPoint canonical_basis_vector(const RationalTriple& v, int position) {
    try {
        return canonicalize(v);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::zero_vector)
            raise(ErrorKind::invalid_basis,
                  "basis vector " + std::to_string(position) + " is zero");
        throw;
    }
}

// Rows [begin, end) of the pair triangle (i, j < i). Chunks are bounded in
// pair count so cap overruns surface after little wasted work.
struct RowChunk {
    std::size_t begin, end;
};

std::vector<RowChunk> chunk_rows(std::size_t row_begin, std::size_t n) {
    constexpr std::size_t target_pairs = std::size_t{1} << 16;
    std::vector<RowChunk> chunks;
    std::size_t begin = row_begin;
    std::size_t area = 0;
    for (std::size_t i = row_begin; i < n; ++i) {
        area += i;
        if (area >= target_pairs) {
            chunks.push_back({begin, i + 1});
            begin = i + 1;
            area = 0;
        }
    }
    if (begin < n) chunks.push_back({begin, n});
    return chunks;
}

// Canonical cross products of rows in the chunk against all columns j < i,
// minus the points already stored. Sorted and deduplicated.
std::vector<HPoint> chunk_candidates(const PointStore& store, RowChunk chunk) {
    std::vector<HPoint> out;
    for (std::size_t i = chunk.begin; i < chunk.end; ++i) {
        const IntTriple& a = store.point(i).coords();
        for (std::size_t j = 0; j < i; ++j) {
            IntTriple c = cross_raw(a, store.point(j).coords());
            if (is_zero_triple(c)) continue;  // parallel rays; distinct entries never are
            HPoint p = canonicalize(std::move(c));
            if (!store.contains(p)) out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct LevelOutcome {
    std::vector<HPoint> fresh;  // sorted unique points absent from the store
    bool over_budget = false;
};

// One closure step. Chunks run in parallel waves; candidates merge into one
// set, so the result is independent of the worker count. The budget check
// after each wave aborts exploding levels early: once the unique-new count
// passes the budget it can only grow, so the abort decision matches the
// full enumeration.
LevelOutcome generate_level(const PointStore& store, std::size_t row_begin,
                            std::uint64_t max_points, int threads) {
    LevelOutcome out;
    const std::vector<RowChunk> chunks = chunk_rows(row_begin, store.size());
    std::unordered_set<HPoint, HPointHash> fresh;
    const std::size_t wave = static_cast<std::size_t>(threads > 1 ? threads : 1);
    std::vector<std::vector<HPoint>> results;
    for (std::size_t c0 = 0; c0 < chunks.size(); c0 += wave) {
        const std::size_t c1 = std::min(chunks.size(), c0 + wave);
        results.assign(c1 - c0, {});
        parallel_tasks(c1 - c0, threads, [&](std::size_t t) {
            results[t] = chunk_candidates(store, chunks[c0 + t]);
        });
        for (auto& chunk_result : results)
            for (auto& p : chunk_result) fresh.insert(std::move(p));
        if (store.size() + fresh.size() > max_points) {
            out.over_budget = true;
            return out;
        }
    }
    out.fresh.assign(fresh.begin(), fresh.end());
    std::sort(out.fresh.begin(), out.fresh.end());
    return out;
}

} // namespace

std::array<HPoint, 3> validate_basis(const BasisSpec& basis) {
    std::array<HPoint, 3> pts = {canonical_basis_vector(basis.u, 1),
                                 canonical_basis_vector(basis.v, 2),
                                 canonical_basis_vector(basis.w, 3)};
    if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2])
        raise(ErrorKind::invalid_basis, "two basis vectors span the same ray");
    if (det3_raw(pts[0].coords(), pts[1].coords(), pts[2].coords()) == 0)
        raise(ErrorKind::invalid_basis, "basis vectors are linearly dependent");
    return pts;
}

bool is_stabilized(const ClosureTrace& trace) {
    return !trace.levels.empty() && trace.levels.back().new_points == 0 &&
           trace.cap_hit == CapHit::none;
}

ClosureResult run_closure(const BasisSpec& basis, const ClosureCaps& caps,
                          const ClosureOptions& opts) {
    if (caps.max_level < 1)
        raise(ErrorKind::invalid_argument, "max_level must be positive");
    if (caps.max_points < 3)
        raise(ErrorKind::invalid_argument, "max_points must admit the basis");
    const std::array<HPoint, 3> seed = validate_basis(basis);
    const int threads = resolve_threads(opts.threads);

    ClosureResult result;
    PointStore& store = result.store;
    ClosureTrace& trace = result.trace;

    for (const HPoint& p : seed) store.insert(p, 1);
    trace.levels.push_back(LevelStat{1, store.size(), store.size(), 0.0});

    for (int level = 2; level <= caps.max_level; ++level) {
        const std::size_t row_begin =
            opts.strategy == PairStrategy::frontier && level > 2
                ? store.level_begin(level - 1)
                : 1;
        const auto t0 = std::chrono::steady_clock::now();
        LevelOutcome out = generate_level(store, row_begin, caps.max_points, threads);
        const auto t1 = std::chrono::steady_clock::now();
        if (out.over_budget) {
            trace.cap_hit = CapHit::point_cap;
            break;
        }
        for (const HPoint& p : out.fresh) store.insert(p, level);
        trace.levels.push_back(LevelStat{
            level, store.size(), out.fresh.size(),
            std::chrono::duration<double, std::milli>(t1 - t0).count()});
        if (out.fresh.empty()) {
            trace.stabilized = true;
            break;
        }
    }
    if (!trace.stabilized && trace.cap_hit == CapHit::none)
        trace.cap_hit = CapHit::level_cap;

    store.set_closure_status(trace.stabilized, trace.levels.back().level);
    return result;
}

PointStore next_level(const PointStore& store, std::uint64_t max_points) {
    LevelOutcome out = generate_level(store, 1, max_points, 1);
    if (out.over_budget)
        raise(ErrorKind::point_cap_exceeded, "next level would exceed the point cap");
    PointStore grown = store;
    const int level = store.max_level() + 1;
    for (const HPoint& p : out.fresh) grown.insert(p, level);
    return grown;
}

} // namespace projclose
