#pragma once

#include <cstddef>
#include <vector>

namespace projclose::kernels {

/// Structure-of-arrays direction block with cached squared norms.
/// push_back is out-of-line on purpose: nsq must be produced by the same
/// arithmetic as the kernel dot products, or self-pairs stop being exact.
struct Block {
    std::vector<double> x, y, z, nsq;

    std::size_t size() const { return x.size(); }
    void reserve(std::size_t n);
    void push_back(double px, double py, double pz);
};

/// One kernel variant. alignment(i, j) := (a_i . b_j)^2 / (nsq_i * nsq_j),
/// the squared cosine of the elliptic distance between the two rays.
struct Ops {
    const char* name;

    /// out[i - q_begin] = max alignment of query i against every point.
    void (*best_alignment)(const Block& queries, std::size_t q_begin, std::size_t q_end,
                           const Block& points, double* out);

    /// Max alignment over i in [a_begin, a_end) x j in [0, b_end).
    double (*max_alignment_cross)(const Block& a, std::size_t a_begin, std::size_t a_end,
                                  const Block& b, std::size_t b_end);

    /// Max alignment over pairs a_begin <= i < a_end, i < j < a.size().
    double (*max_alignment_within)(const Block& a, std::size_t a_begin, std::size_t a_end);
};

const Ops& scalar_ops();

/// AVX2 variant, or nullptr when the CPU (or build) lacks it.
const Ops* avx2_ops();

/// Runtime-selected kernel. PROJCLOSE_KERNEL=scalar|avx2|auto overrides.
const Ops& active_ops();

/// arccos(sqrt(alignment)) with the argument clamped into [0, 1].
double angle_from_alignment(double alignment);

} // namespace projclose::kernels
