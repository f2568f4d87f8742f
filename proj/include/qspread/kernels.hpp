#pragma once

#include <complex>
#include <cstdint>

// Low-level amplitude kernels. The primary implementations parallelize over
// amplitude pairs with OpenMP; qspread::kernels::serial holds the plain-loop
// reference used by the tests and the kernel benchmark. Both variants perform
// identical arithmetic in identical order per element, so their results are
// bit-for-bit equal. Reductions use a fixed 256-chunk tree whose summation
// order does not depend on the thread count.

namespace qspread::kernels {

using c64 = std::complex<double>;

/// Applies a 2x2 unitary to the target qubit on every index whose bits in
/// `ctrl_mask` are all set. ctrl_mask must not include the target bit.
void apply_1q(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask,
              c64 u00, c64 u01, c64 u10, c64 u11);

/// X on target under a control mask (covers X/CX/CCX/MCX).
void apply_x(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask);

/// Flips the sign of every amplitude whose index has all bits of `mask` set
/// (covers Z and MCZ; for MCZ the mask joins the controls and the target).
void apply_phase_flip(c64* amps, std::uint64_t dim, std::uint64_t mask);

/// Multiplies amp[i] by exp(i*angle) wherever all bits of `mask` are set.
void apply_cphase(c64* amps, std::uint64_t dim, std::uint64_t mask, double angle);

double norm_sqr(const c64* amps, std::uint64_t dim);

/// Probability that `qubit` reads 1.
double prob_one(const c64* amps, std::uint64_t dim, int qubit);

namespace serial {

void apply_1q(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask,
              c64 u00, c64 u01, c64 u10, c64 u11);
void apply_x(c64* amps, std::uint64_t dim, int target, std::uint64_t ctrl_mask);
void apply_phase_flip(c64* amps, std::uint64_t dim, std::uint64_t mask);
void apply_cphase(c64* amps, std::uint64_t dim, std::uint64_t mask, double angle);
double norm_sqr(const c64* amps, std::uint64_t dim);
double prob_one(const c64* amps, std::uint64_t dim, int qubit);

} // namespace serial

} // namespace qspread::kernels
