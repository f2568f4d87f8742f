#include "qspread/kernels.hpp"

#include <cmath>

namespace qspread::kernels {

namespace {

// Below this many amplitude pairs the OpenMP fork overhead dominates.
constexpr std::int64_t kParallelThreshold = 1 << 14;

// Reductions sum this many contiguous chunks sequentially and then combine
// the chunk totals in index order, so the result is independent of the
// number of threads (and identical to the serial reference).
constexpr std::uint64_t kReductionChunks = 256;

inline std::uint64_t pair_index(std::uint64_t i, int target) {
    const std::uint64_t low = i & ((std::uint64_t{1} << target) - 1);
    return ((i >> target) << (target + 1)) | low;
}

template <typename Body>
void reduce_chunks(std::uint64_t dim, double* partial, std::uint64_t nchunks, Body body,
                   bool parallel) {
    const auto n = static_cast<std::int64_t>(nchunks);
#pragma omp parallel for schedule(static) if (parallel && dim >= (std::uint64_t{1} << 16))
    for (std::int64_t c = 0; c < n; ++c) {
        const std::uint64_t lo = dim * static_cast<std::uint64_t>(c) / nchunks;
        const std::uint64_t hi = dim * (static_cast<std::uint64_t>(c) + 1) / nchunks;
        partial[c] = body(lo, hi);
    }
}

double combine(const double* partial, std::uint64_t nchunks) {
    double total = 0.0;
    for (std::uint64_t c = 0; c < nchunks; ++c) total += partial[c];
    return total;
}

double norm_sqr_impl(const c64* amps, std::uint64_t dim, bool parallel) {
    const std::uint64_t nchunks = dim < kReductionChunks ? dim : kReductionChunks;
    double partial[kReductionChunks];
    reduce_chunks(
        dim, partial, nchunks,
        [amps](std::uint64_t lo, std::uint64_t hi) {
            double s = 0.0;
            for (std::uint64_t i = lo; i < hi; ++i) s += std::norm(amps[i]);
            return s;
        },
        parallel);
    return combine(partial, nchunks);
}

double prob_one_impl(const c64* amps, std::uint64_t dim, int qubit, bool parallel) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t nchunks = dim < kReductionChunks ? dim : kReductionChunks;
    double partial[kReductionChunks];
    reduce_chunks(
        dim, partial, nchunks,
        [amps, bit](std::uint64_t lo, std::uint64_t hi) {
            double s = 0.0;
            for (std::uint64_t i = lo; i < hi; ++i)
                if (i & bit) s += std::norm(amps[i]);
            return s;
        },
        parallel);
    return combine(partial, nchunks);
}

} // namespace

void apply_1q(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask,
              c64 u00, c64 u01, c64 u10, c64 u11) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const auto half = static_cast<std::int64_t>(dim >> 1);
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = pair_index(static_cast<std::uint64_t>(i), target);
        if ((i0 & ctrl_mask) != ctrl_mask) continue;
        const std::uint64_t i1 = i0 | tbit;
        const c64 a = amps[i0];
        const c64 b = amps[i1];
        amps[i0] = u00 * a + u01 * b;
        amps[i1] = u10 * a + u11 * b;
    }
}

void apply_x(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const auto half = static_cast<std::int64_t>(dim >> 1);
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = pair_index(static_cast<std::uint64_t>(i), target);
        if ((i0 & ctrl_mask) != ctrl_mask) continue;
        const std::uint64_t i1 = i0 | tbit;
        const c64 tmp = amps[i0];
        amps[i0] = amps[i1];
        amps[i1] = tmp;
    }
}

void apply_phase_flip(c64* amps, std::uint64_t dim, std::uint64_t mask) {
    const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        if ((u & mask) == mask) amps[i] = -amps[i];
    }
}

void apply_cphase(c64* amps, std::uint64_t dim, std::uint64_t mask, double angle) {
    const c64 phase = std::polar(1.0, angle);
    const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        if ((u & mask) == mask) amps[i] *= phase;
    }
}

double norm_sqr(const c64* amps, std::uint64_t dim) { return norm_sqr_impl(amps, dim, true); }

double prob_one(const c64* amps, std::uint64_t dim, int qubit) {
    return prob_one_impl(amps, dim, qubit, true);
}

namespace serial {

void apply_1q(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask,
              c64 u00, c64 u01, c64 u10, c64 u11) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t half = dim >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = pair_index(i, target);
        if ((i0 & ctrl_mask) != ctrl_mask) continue;
        const std::uint64_t i1 = i0 | tbit;
        const c64 a = amps[i0];
        const c64 b = amps[i1];
        amps[i0] = u00 * a + u01 * b;
        amps[i1] = u10 * a + u11 * b;
    }
}

void apply_x(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t half = dim >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = pair_index(i, target);
        if ((i0 & ctrl_mask) != ctrl_mask) continue;
        const std::uint64_t i1 = i0 | tbit;
        const c64 tmp = amps[i0];
        amps[i0] = amps[i1];
        amps[i1] = tmp;
    }
}

void apply_phase_flip(c64* amps, std::uint64_t dim, std::uint64_t mask) {
    for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) amps[i] = -amps[i];
}

void apply_cphase(c64* amps, std::uint64_t dim, std::uint64_t mask, double angle) {
    const c64 phase = std::polar(1.0, angle);
    for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) amps[i] *= phase;
}

double norm_sqr(const c64* amps, std::uint64_t dim) { return norm_sqr_impl(amps, dim, false); }

double prob_one(const c64* amps, std::uint64_t dim, int qubit) {
    return prob_one_impl(amps, dim, qubit, false);
}

} // namespace serial

} // namespace qspread::kernels
