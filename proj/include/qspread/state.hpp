#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qspread/circuit.hpp"
#include "qspread/errors.hpp"

namespace qspread {

inline constexpr int kMaxQubits = 24;

enum class KernelMode { Parallel, Serial };

/// Dense statevector over n qubits, little-endian: qubit q corresponds to bit
/// q of the amplitude index, so basis index i = sum_q bit_q(i) * 2^q.
class Statevector {
public:
    /// Initializes |0...0>. Throws CapacityError unless 1 <= n <= kMaxQubits.
    explicit Statevector(int num_qubits, KernelMode mode = KernelMode::Parallel);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
    KernelMode mode() const { return mode_; }

    std::complex<double> amplitude(std::uint64_t index) const { return amps_.at(index); }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::complex<double>* data() { return amps_.data(); }
    const std::complex<double>* data() const { return amps_.data(); }

    void apply(const Gate& g);
    void apply(const Circuit& c);

    /// Applies the circuit's inverse (reversed order, inverted gates).
    void apply_inverse(const Circuit& c);

    /// Applies the gate with one extra control qubit joined to its control
    /// set. Used by the phase-estimation driver; the extra control may turn
    /// any gate of the closed set into its controlled variant.
    void apply_controlled(const Gate& g, int extra_control);

    /// Multiplies every amplitude whose index has all bits of `mask` set by
    /// exp(i*angle). Simulation-level phase primitive.
    void apply_cphase(std::uint64_t mask, double angle);

    double norm_sqr() const;

    /// P(qubit = 1).
    double marginal_probability(int qubit) const;

    /// Multinomial sample of basis indices from |amp|^2.
    ///
    /// PRNG: std::mt19937_64 seeded with `seed`; each shot draws a uniform
    /// u in [0,1) as (rng() >> 11) * 2^-53 and inverts the cumulative
    /// distribution by binary search. Fully deterministic for a given seed.
    std::map<std::uint64_t, std::uint64_t> sample_counts(std::uint64_t shots,
                                                         std::uint64_t seed) const;

private:
    void check_gate(const Gate& g) const;
    void dispatch(const Gate& g, std::uint64_t extra_mask);

    int num_qubits_ = 0;
    KernelMode mode_ = KernelMode::Parallel;
    std::vector<std::complex<double>> amps_;
};

} // namespace qspread
