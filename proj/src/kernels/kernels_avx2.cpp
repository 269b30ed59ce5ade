// AVX2 kernels. Lane arithmetic mirrors the scalar reference exactly:
// mul/add in the same association, no FMA, so every pair alignment is
// bitwise identical to the scalar path and the reductions agree.

#include "projclose/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace projclose::kernels {

namespace {

inline double dot3(double ax, double ay, double az, double bx, double by, double bz) {
    return (ax * bx + ay * by) + az * bz;
}

inline double alignment1(const Block& a, std::size_t i, const Block& b, std::size_t j) {
    double d = dot3(a.x[i], a.y[i], a.z[i], b.x[j], b.y[j], b.z[j]);
    return (d * d) / (a.nsq[i] * b.nsq[j]);
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_max_pd(lo, hi);
    m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

// Max alignment of row i of `a` against b[0..b_end), 4 columns at a time.
inline double row_max(const Block& a, std::size_t i, const Block& b,
                      std::size_t j_begin, std::size_t j_end) {
    const __m256d ax = _mm256_set1_pd(a.x[i]);
    const __m256d ay = _mm256_set1_pd(a.y[i]);
    const __m256d az = _mm256_set1_pd(a.z[i]);
    const __m256d an = _mm256_set1_pd(a.nsq[i]);
    __m256d vbest = _mm256_setzero_pd();
    std::size_t j = j_begin;
    for (; j + 4 <= j_end; j += 4) {
        __m256d bx = _mm256_loadu_pd(&b.x[j]);
        __m256d by = _mm256_loadu_pd(&b.y[j]);
        __m256d bz = _mm256_loadu_pd(&b.z[j]);
        __m256d bn = _mm256_loadu_pd(&b.nsq[j]);
        __m256d d = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(ax, bx), _mm256_mul_pd(ay, by)),
            _mm256_mul_pd(az, bz));
        __m256d r = _mm256_div_pd(_mm256_mul_pd(d, d), _mm256_mul_pd(an, bn));
        vbest = _mm256_max_pd(vbest, r);
    }
    double best = hmax(vbest);
    for (; j < j_end; ++j) {
        double r = alignment1(a, i, b, j);
        if (r > best) best = r;
    }
    return best;
}

void best_alignment_avx2(const Block& q, std::size_t q_begin, std::size_t q_end,
                         const Block& p, double* out) {
    for (std::size_t i = q_begin; i < q_end; ++i)
        out[i - q_begin] = row_max(q, i, p, 0, p.size());
}

double max_alignment_cross_avx2(const Block& a, std::size_t a_begin, std::size_t a_end,
                                const Block& b, std::size_t b_end) {
    double best = 0.0;
    for (std::size_t i = a_begin; i < a_end; ++i) {
        double r = row_max(a, i, b, 0, b_end);
        if (r > best) best = r;
    }
    return best;
}

double max_alignment_within_avx2(const Block& a, std::size_t a_begin, std::size_t a_end) {
    double best = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = a_begin; i < a_end; ++i) {
        double r = row_max(a, i, a, i + 1, n);
        if (r > best) best = r;
    }
    return best;
}

const Ops avx2_table{"avx2", &best_alignment_avx2, &max_alignment_cross_avx2,
                     &max_alignment_within_avx2};

} // namespace

const Ops* avx2_ops_table() { return &avx2_table; }

} // namespace projclose::kernels

#else

namespace projclose::kernels {
const Ops* avx2_ops_table() { return nullptr; }
} // namespace projclose::kernels

#endif
