// Scalar reference kernels and runtime dispatch. This translation unit is
// compiled with -ffp-contract=off so the scalar path, the block-building
// path, and the SIMD remainder loops all round identically.

#include "projclose/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace projclose::kernels {

namespace {

inline double dot3(double ax, double ay, double az, double bx, double by, double bz) {
    return (ax * bx + ay * by) + az * bz;
}

inline double alignment(const Block& a, std::size_t i, const Block& b, std::size_t j) {
    double d = dot3(a.x[i], a.y[i], a.z[i], b.x[j], b.y[j], b.z[j]);
    return (d * d) / (a.nsq[i] * b.nsq[j]);
}

void best_alignment_scalar(const Block& q, std::size_t q_begin, std::size_t q_end,
                           const Block& p, double* out) {
    const std::size_t np = p.size();
    for (std::size_t i = q_begin; i < q_end; ++i) {
        double best = 0.0;
        for (std::size_t j = 0; j < np; ++j) {
            double r = alignment(q, i, p, j);
            if (r > best) best = r;
        }
        out[i - q_begin] = best;
    }
}

double max_alignment_cross_scalar(const Block& a, std::size_t a_begin, std::size_t a_end,
                                  const Block& b, std::size_t b_end) {
    double best = 0.0;
    for (std::size_t i = a_begin; i < a_end; ++i) {
        for (std::size_t j = 0; j < b_end; ++j) {
            double r = alignment(a, i, b, j);
            if (r > best) best = r;
        }
    }
    return best;
}

double max_alignment_within_scalar(const Block& a, std::size_t a_begin, std::size_t a_end) {
    double best = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = a_begin; i < a_end; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double r = alignment(a, i, a, j);
            if (r > best) best = r;
        }
    }
    return best;
}

const Ops scalar_table{"scalar", &best_alignment_scalar, &max_alignment_cross_scalar,
                       &max_alignment_within_scalar};

} // namespace

void Block::reserve(std::size_t n) {
    x.reserve(n);
    y.reserve(n);
    z.reserve(n);
    nsq.reserve(n);
}

void Block::push_back(double px, double py, double pz) {
    x.push_back(px);
    y.push_back(py);
    z.push_back(pz);
    nsq.push_back(dot3(px, py, pz, px, py, pz));
}

const Ops& scalar_ops() { return scalar_table; }

#if defined(__x86_64__) || defined(_M_X64)
const Ops* avx2_ops_table();  // kernels_avx2.cpp

const Ops* avx2_ops() {
    return __builtin_cpu_supports("avx2") ? avx2_ops_table() : nullptr;
}
#else
const Ops* avx2_ops() { return nullptr; }
#endif

const Ops& active_ops() {
    static const Ops* chosen = [] {
        const char* env = std::getenv("PROJCLOSE_KERNEL");
        std::string mode = env ? env : "auto";
        if (mode == "scalar") return &scalar_ops();
        if (mode == "avx2") {
            const Ops* a = avx2_ops();
            if (!a) throw std::runtime_error("PROJCLOSE_KERNEL=avx2 but AVX2 is unavailable");
            return a;
        }
        if (const Ops* a = avx2_ops()) return a;
        return &scalar_ops();
    }();
    return *chosen;
}

double angle_from_alignment(double alignment) {
    if (alignment >= 1.0) return 0.0;
    if (alignment < 0.0) alignment = 0.0;
    return std::acos(std::sqrt(alignment));
}

} // namespace projclose::kernels
