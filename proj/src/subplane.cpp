#include "projclose/subplane.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "projclose/errors.hpp"
#include "projclose/rng.hpp"

namespace projclose {

const char* to_string(SubplaneKind kind) {
    switch (kind) {
        case SubplaneKind::degenerate_tripod: return "degenerate_tripod";
        case SubplaneKind::degenerate_five_point: return "degenerate_five_point";
        case SubplaneKind::dense_infinite: return "dense_infinite";
    }
    return "?";
}

Classification classify_basis(const BasisSpec& basis) {
    const std::array<HPoint, 3> b = validate_basis(basis);
    const bool z01 = dot_raw(b[0].coords(), b[1].coords()) == 0;
    const bool z02 = dot_raw(b[0].coords(), b[2].coords()) == 0;
    const bool z12 = dot_raw(b[1].coords(), b[2].coords()) == 0;
    if (z01 && z02 && z12) return {SubplaneKind::degenerate_tripod, 0};
    if (z01 && z02) return {SubplaneKind::degenerate_five_point, 0};
    if (z01 && z12) return {SubplaneKind::degenerate_five_point, 1};
    if (z02 && z12) return {SubplaneKind::degenerate_five_point, 2};
    return {SubplaneKind::dense_infinite, std::nullopt};
}

namespace {

// First quadrangle in index order: i < j < k < l with no collinear triple.
// Stores without one are degenerate, hence tiny, so the exhaustive scan is
// cheap exactly when it cannot exit early.
std::optional<std::array<HPoint, 4>> find_quadrangle(const PointStore& store) {
    const std::size_t n = store.size();
    for (std::size_t i = 0; i + 3 < n; ++i) {
        const IntTriple& a = store.point(i).coords();
        for (std::size_t j = i + 1; j + 2 < n; ++j) {
            const IntTriple& b = store.point(j).coords();
            for (std::size_t k = j + 1; k + 1 < n; ++k) {
                const IntTriple& c = store.point(k).coords();
                if (det3_raw(a, b, c) == 0) continue;
                for (std::size_t l = k + 1; l < n; ++l) {
                    const IntTriple& d = store.point(l).coords();
                    if (det3_raw(a, b, d) == 0) continue;
                    if (det3_raw(a, c, d) == 0) continue;
                    if (det3_raw(b, c, d) == 0) continue;
                    return std::array<HPoint, 4>{store.point(i), store.point(j),
                                                 store.point(k), store.point(l)};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

AxiomReport verify_axioms(const PointStore& store, std::uint64_t sample_budget,
                          std::uint64_t seed) {
    AxiomReport report;
    const std::size_t n = store.size();
    if (n >= 2) {
        SplitMix64 rng{seed};
        auto distinct_pair = [&](std::size_t& i, std::size_t& j) {
            i = static_cast<std::size_t>(rng.below(n));
            do {
                j = static_cast<std::size_t>(rng.below(n));
            } while (j == i);
        };

        for (std::uint64_t t = 0; t < sample_budget; ++t) {
            std::size_t i, j;
            distinct_pair(i, j);
            HLine l = join(store.point(i), store.point(j));
            ++report.p1_checked;
            if (!incident(store.point(i), l) || !incident(store.point(j), l))
                ++report.p1_failures;
        }

        for (std::uint64_t t = 0; t < sample_budget; ++t) {
            std::size_t i, j, k, l;
            distinct_pair(i, j);
            distinct_pair(k, l);
            HLine l1 = join(store.point(i), store.point(j));
            HLine l2 = join(store.point(k), store.point(l));
            if (l1 == l2) continue;
            ++report.p2_checked;
            if (store.contains(meet(l1, l2))) continue;
            if (store.stabilized())
                ++report.p2_failures;
            else
                ++report.p2_open;
        }
    }

    if (auto quad = find_quadrangle(store)) {
        report.p3_found = true;
        report.p3_witness = *quad;
    }

    const OrthoResult ortho = verify_ortho_closed(store);
    report.ortho_checked = ortho.checked;
    report.ortho_failures = ortho.failures;
    return report;
}

OrthoResult verify_ortho_closed(const PointStore& store) {
    OrthoResult result;
    const int limit = store.last_completed_level() - 1;
    const std::size_t n = store.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (store.level(i) > limit) break;  // level tags are non-decreasing
        const HLine pol = polar(store.point(i));
        int witnesses = 0;
        for (std::size_t j = 0; j < n && witnesses < 2; ++j)
            if (incident(store.point(j), pol)) ++witnesses;
        ++result.checked;
        if (witnesses < 2) ++result.failures;
    }
    return result;
}

ShapeDescriptor detect_degenerate_shape(const PointStore& store) {
    if (!store.stabilized())
        raise(ErrorKind::not_stabilized, "shape taxonomy applies to stabilized stores only");
    const std::size_t n = store.size();

    auto all_on = [&](const HLine& l, std::size_t skip) {
        for (std::size_t i = 0; i < n; ++i)
            if (i != skip && !incident(store.point(i), l)) return false;
        return true;
    };

    if (n >= 2) {
        HLine l = join(store.point(0), store.point(1));
        if (all_on(l, n)) return {DegenerateShape::collinear_set, l, std::nullopt};
    }

    if (n >= 3) {
        // Apex candidates in lexicographic order; ties resolve to the
        // smallest canonical point.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return store.point(a) < store.point(b);
        });
        for (std::size_t apex : order) {
            std::size_t q0 = apex == 0 ? 1 : 0;
            std::size_t q1 = apex <= 1 ? 2 : 1;
            HLine l = join(store.point(q0), store.point(q1));
            if (!incident(store.point(apex), l) && all_on(l, apex))
                return {DegenerateShape::line_plus_point, l, store.point(apex)};
        }
    }

    return {DegenerateShape::not_degenerate, std::nullopt, std::nullopt};
}

namespace {

void validate_quadrangle(const std::array<HPoint, 4>& quad) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (quad[i] == quad[j])
                raise(ErrorKind::not_a_quadrangle, "quadrangle points must be distinct");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (det3_raw(quad[i].coords(), quad[j].coords(), quad[k].coords()) == 0)
                    raise(ErrorKind::not_a_quadrangle,
                          "three of the four points are collinear");
}

MoebiusResult moebius_impl(const std::array<HPoint, 4>& quad, int rounds,
                           const ClosureCaps& caps) {
    validate_quadrangle(quad);
    if (rounds < 0) raise(ErrorKind::invalid_argument, "rounds must be non-negative");

    MoebiusResult result;
    PointStore& store = result.store;
    ClosureTrace& trace = result.trace;
    for (const HPoint& p : quad) store.insert(p, 1);
    trace.levels.push_back(LevelStat{1, store.size(), store.size(), 0.0});

    for (int round = 1; round <= rounds; ++round) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t n = store.size();

        std::unordered_set<HLine, HLineHash> line_set;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                line_set.insert(join(store.point(i), store.point(j)));
        const std::vector<HLine> lines(line_set.begin(), line_set.end());

        std::unordered_set<HPoint, HPointHash> fresh;
        bool over_budget = false;
        for (std::size_t i = 0; i < lines.size() && !over_budget; ++i) {
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                HPoint p = meet(lines[i], lines[j]);
                if (store.contains(p)) continue;
                fresh.insert(std::move(p));
                if (store.size() + fresh.size() > caps.max_points) {
                    over_budget = true;  // the whole round is discarded
                    break;
                }
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        if (over_budget) {
            trace.cap_hit = CapHit::point_cap;
            break;
        }

        std::vector<HPoint> added(fresh.begin(), fresh.end());
        std::sort(added.begin(), added.end());
        for (const HPoint& p : added) store.insert(p, round + 1);
        trace.levels.push_back(LevelStat{
            round + 1, store.size(), added.size(),
            std::chrono::duration<double, std::milli>(t1 - t0).count()});
        if (added.empty()) {
            trace.stabilized = true;
            break;
        }
    }
    if (!trace.stabilized && trace.cap_hit == CapHit::none)
        trace.cap_hit = CapHit::level_cap;

    store.set_closure_status(trace.stabilized, trace.levels.back().level);
    return result;
}

} // namespace

MoebiusResult run_moebius(const std::array<RationalTriple, 4>& quadrangle,
                          int rounds, const ClosureCaps& caps) {
    auto canon_one = [](const RationalTriple& t) -> HPoint {
        try {
            return canonicalize(t);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::zero_vector)
                raise(ErrorKind::not_a_quadrangle, "quadrangle contains the zero vector");
            throw;
        }
    };
    const std::array<HPoint, 4> quad = {canon_one(quadrangle[0]), canon_one(quadrangle[1]),
                                        canon_one(quadrangle[2]), canon_one(quadrangle[3])};
    return moebius_impl(quad, rounds, caps);
}

PointStore moebius_net(const std::array<HPoint, 4>& quadrangle, int rounds,
                       const ClosureCaps& caps) {
    return moebius_impl(quadrangle, rounds, caps).store;
}

} // namespace projclose
