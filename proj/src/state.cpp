#include "qspread/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qspread/kernels.hpp"

namespace qspread {

namespace {

using kernels::c64;

std::uint64_t control_mask(const Gate& g) {
    std::uint64_t mask = 0;
    for (int c : g.controls) mask |= std::uint64_t{1} << c;
    return mask;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

} // namespace

Statevector::Statevector(int num_qubits, KernelMode mode)
    : num_qubits_(num_qubits), mode_(mode) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw CapacityError("statevector: qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]");
    amps_.assign(std::uint64_t{1} << num_qubits, c64{0.0, 0.0});
    amps_[0] = c64{1.0, 0.0};
}

void Statevector::check_gate(const Gate& g) const { g.validate(num_qubits_); }

void Statevector::dispatch(const Gate& g, std::uint64_t extra_mask) {
    const std::uint64_t cm = control_mask(g) | extra_mask;
    const std::uint64_t tbit = std::uint64_t{1} << g.target;
    const bool serial = mode_ == KernelMode::Serial;
    auto one_q = [&](c64 u00, c64 u01, c64 u10, c64 u11) {
        if (serial)
            kernels::serial::apply_1q(amps_.data(), dim(), g.target, cm, u00, u01, u10, u11);
        else
            kernels::apply_1q(amps_.data(), dim(), g.target, cm, u00, u01, u10, u11);
    };
    switch (g.kind) {
        case GateKind::H:
            one_q({kInvSqrt2, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0}, {-kInvSqrt2, 0});
            break;
        case GateKind::RY:
        case GateKind::CRY: {
            const double c = std::cos(g.angle / 2.0);
            const double s = std::sin(g.angle / 2.0);
            one_q({c, 0}, {-s, 0}, {s, 0}, {c, 0});
            break;
        }
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX:
            if (serial)
                kernels::serial::apply_x(amps_.data(), dim(), g.target, cm);
            else
                kernels::apply_x(amps_.data(), dim(), g.target, cm);
            break;
        case GateKind::Z:
        case GateKind::MCZ:
            if (serial)
                kernels::serial::apply_phase_flip(amps_.data(), dim(), cm | tbit);
            else
                kernels::apply_phase_flip(amps_.data(), dim(), cm | tbit);
            break;
    }
}

void Statevector::apply(const Gate& g) {
    check_gate(g);
    dispatch(g, 0);
}

void Statevector::apply(const Circuit& c) {
    if (c.num_qubits() != num_qubits_)
        throw StructuralError("statevector: circuit width " + std::to_string(c.num_qubits()) +
                              " does not match state width " + std::to_string(num_qubits_));
    for (const Gate& g : c.gates()) dispatch(g, 0);
}

void Statevector::apply_inverse(const Circuit& c) { apply(c.inverse()); }

void Statevector::apply_controlled(const Gate& g, int extra_control) {
    check_gate(g);
    if (extra_control < 0 || extra_control >= num_qubits_)
        throw StructuralError("statevector: extra control out of range");
    if (extra_control == g.target ||
        std::find(g.controls.begin(), g.controls.end(), extra_control) != g.controls.end())
        throw StructuralError("statevector: extra control collides with gate qubits");
    dispatch(g, std::uint64_t{1} << extra_control);
}

void Statevector::apply_cphase(std::uint64_t mask, double angle) {
    if (mask >> num_qubits_)
        throw StructuralError("statevector: phase mask out of range");
    if (mode_ == KernelMode::Serial)
        kernels::serial::apply_cphase(amps_.data(), dim(), mask, angle);
    else
        kernels::apply_cphase(amps_.data(), dim(), mask, angle);
}

double Statevector::norm_sqr() const {
    return mode_ == KernelMode::Serial ? kernels::serial::norm_sqr(amps_.data(), dim())
                                       : kernels::norm_sqr(amps_.data(), dim());
}

double Statevector::marginal_probability(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_)
        throw StructuralError("statevector: qubit index out of range");
    return mode_ == KernelMode::Serial ? kernels::serial::prob_one(amps_.data(), dim(), qubit)
                                       : kernels::prob_one(amps_.data(), dim(), qubit);
}

std::map<std::uint64_t, std::uint64_t> Statevector::sample_counts(std::uint64_t shots,
                                                                  std::uint64_t seed) const {
    std::vector<double> cumulative(amps_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::norm(amps_[i]);
        cumulative[i] = acc;
    }
    std::map<std::uint64_t, std::uint64_t> counts;
    std::mt19937_64 rng(seed);
    constexpr double kTo53 = 1.0 / 9007199254740992.0; // 2^-53
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * kTo53 * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::uint64_t idx = it == cumulative.end()
                                ? cumulative.size() - 1
                                : static_cast<std::uint64_t>(it - cumulative.begin());
        ++counts[idx];
    }
    return counts;
}

} // namespace qspread
