#include "qspread/baselines.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "qspread/builders.hpp"
#include "qspread/resources.hpp"
#include "qspread/state.hpp"

namespace qspread {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<int> value_controls_msb_first(int n) {
    std::vector<int> ctrls(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) ctrls[static_cast<std::size_t>(t)] = n - 1 - t;
    return ctrls;
}

} // namespace

Circuit build_rotation_circuit(const Pmf& pmf, const RotationConfig& cfg) {
    pmf.validate();
    const int n = pmf.num_qubits();
    RegisterLayout layout;
    layout.value_reg = {0, n};
    layout.target = n;
    layout.total_qubits = n + 1;

    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    c.append(build_amplitude_encoder(pmf), 0);
    // Global offset rotation, then one controlled rotation per value bit.
    // Gate angles are twice the amplitude angles, so the |1> probability of
    // the target conditioned on |i> is sin^2(base + m * i * theta).
    c.ry(n, 2.0 * cfg.base_angle);
    for (int j = 0; j < n; ++j)
        c.cry(j, n, 2.0 * cfg.theta * cfg.price_scale_m * std::ldexp(1.0, j));
    return c;
}

double taylor_wag_recovery(double probability, const RotationConfig& cfg) {
    const double denom = cfg.theta * cfg.price_scale_m * std::sin(2.0 * cfg.base_angle);
    if (denom == 0.0) throw DomainError("rotation recovery: degenerate linearization");
    const double s = std::sin(cfg.base_angle);
    return (probability - s * s) / denom;
}

std::vector<double> pricing_domain(std::size_t n_states, double base, double theta) {
    std::vector<double> x(n_states);
    for (std::size_t i = 0; i < n_states; ++i) x[i] = base + static_cast<double>(i) * theta;
    return x;
}

double quantize_angle(double angle, int lut_bits) {
    if (lut_bits < 1 || lut_bits > 62) throw DomainError("quantize_angle: lut_bits out of range");
    const double step = (kPi / 2.0) / std::ldexp(1.0, lut_bits);
    return std::round(angle / step) * step;
}

Circuit build_digital_calibration_circuit(const Pmf& pmf, const DigitalCalibrationConfig& cfg) {
    pmf.validate();
    const int n = pmf.num_qubits();
    const std::size_t n_states = pmf.probs.size();
    if (cfg.domain.size() != n_states)
        throw StructuralError("digital calibration: domain size must match distribution size");

    RegisterLayout layout;
    layout.value_reg = {0, n};
    layout.target = n;
    layout.total_qubits = n + 1;

    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    c.append(build_amplitude_encoder(pmf), 0);

    // One table entry per basis state: rotate the target so its |1>
    // probability equals the quantized payoff value x_i directly.
    const std::vector<int> ctrls = value_controls_msb_first(n);
    for (std::size_t i = 0; i < n_states; ++i) {
        const double x = cfg.domain[i];
        if (!(x >= 0.0 && x <= 1.0))
            throw DomainError("digital calibration: domain value " + std::to_string(x) +
                              " outside [0, 1]");
        const double amp_angle = quantize_angle(std::asin(std::sqrt(x)), cfg.lut_bits);
        append_pattern_ry(c, ctrls, i, n, 2.0 * amp_angle);
    }
    return c;
}

double calibration_wag_recovery(double probability, double base, double theta) {
    if (theta == 0.0) throw DomainError("calibration recovery: theta must be nonzero");
    return (probability - base) / theta;
}

EstimationResult weighted_adder_mean(const Pmf& pmf, const std::vector<std::uint64_t>& weights,
                                     std::uint64_t shots, std::uint64_t seed) {
    pmf.validate();
    const int n = pmf.num_qubits();
    if (weights.size() != static_cast<std::size_t>(n))
        throw StructuralError("weighted adder: need one weight per value qubit");

    std::uint64_t total = 0;
    for (std::uint64_t w : weights) total += w;
    const int m = std::max(1, static_cast<int>(std::bit_width(total)));

    const RegisterLayout layout = make_weighted_adder_layout(n, m);
    if (layout.total_qubits > kMaxQubits)
        throw CapacityError("weighted adder: circuit needs " +
                            std::to_string(layout.total_qubits) + " qubits, limit is " +
                            std::to_string(kMaxQubits));

    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    c.append(build_amplitude_encoder(pmf), layout.value_reg.start);
    c.append(build_weighted_adder(weights, layout));

    Statevector s(c.num_qubits());
    s.apply(c);

    const QubitRange sum = *layout.sum_reg;
    const std::uint64_t sum_mask = (std::uint64_t{1} << sum.width) - 1;
    double mean_sum = 0.0;
    if (shots == 0) {
        const std::uint64_t dim = std::uint64_t{1} << c.num_qubits();
        for (std::uint64_t idx = 0; idx < dim; ++idx) {
            const double p = std::norm(s.amplitude(idx));
            if (p == 0.0) continue;
            mean_sum += p * static_cast<double>((idx >> sum.start) & sum_mask);
        }
    } else {
        const auto counts = s.sample_counts(shots, seed);
        std::uint64_t acc = 0;
        for (const auto& [idx, count] : counts) acc += count * ((idx >> sum.start) & sum_mask);
        mean_sum = static_cast<double>(acc) / static_cast<double>(shots);
    }

    double truth = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
        std::uint64_t wsum = 0;
        for (int j = 0; j < n; ++j)
            if ((i >> j) & 1) wsum += weights[static_cast<std::size_t>(j)];
        truth += pmf.probs[i] * static_cast<double>(wsum);
    }

    EstimationResult r;
    r.method = "qwa";
    r.estimator = shots == 0 ? "exact" : "shots";
    r.wag = mean_sum;
    r.probability = mean_sum / static_cast<double>(pmf.probs.size());
    r.ground_truth = truth;
    r.relative_error_pct = relative_error_pct(mean_sum, truth);
    r.resources = resource_report(c);
    r.seed = seed;
    r.shots = shots;
    r.eval_qubits = 0;
    return r;
}

} // namespace qspread
