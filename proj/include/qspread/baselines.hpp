#pragma once

#include <cstdint>
#include <vector>

#include "qspread/circuit.hpp"
#include "qspread/estimation.hpp"
#include "qspread/pmf.hpp"

namespace qspread {

/// Rotation-method settings. The circuit maps basis state |i> to a target
/// amplitude sin(base_angle + price_scale_m * i * theta); price_scale_m
/// rescales the per-index rotation step.
struct RotationConfig {
    double theta = 0.01;
    double base_angle = 1.5707963267948966 / 2.0; // pi/4
    double price_scale_m = 1.0;
};

/// Amplitude encoder followed by RY(2*base_angle) on the extra target wire
/// and CRY(2*theta*price_scale_m*2^j) from each value qubit j. The target
/// marginal is sum_i p_i sin^2(base_angle + price_scale_m * i * theta).
Circuit build_rotation_circuit(const Pmf& pmf, const RotationConfig& cfg);

/// First-order inversion of the rotation marginal:
/// (p - sin^2(base)) / (theta * price_scale_m * sin(2*base)).
/// At base pi/4, m=1 this is the familiar (p - 1/2)/theta.
double taylor_wag_recovery(double measured_prob, const RotationConfig& cfg);

/// Lookup-table calibration: per-state target probabilities (the domain) are
/// converted to angles arcsin(sqrt(x)), quantized to lut_bits over [0, pi/2].
struct DigitalCalibrationConfig {
    int lut_bits = 6;
    std::vector<double> domain;
};

/// The affine pricing domain x_i = base + i*theta for all 2^n states.
std::vector<double> pricing_domain(std::size_t n_states, double base, double theta);

/// Rounds an angle to the nearest multiple of (pi/2)/2^lut_bits.
double quantize_angle(double angle, int lut_bits);

/// Amplitude encoder followed by one pattern-selected RY(2*quantized angle)
/// per basis state: the target probability against state |i> becomes
/// sin^2(quantize(arcsin(sqrt(x_i)))). Domain values must lie in [0, 1].
Circuit build_digital_calibration_circuit(const Pmf& pmf, const DigitalCalibrationConfig& cfg);

/// Inverts the affine pricing map: WAG = (p - base) / theta. Exactly linear,
/// so the only method error is LUT quantization.
double calibration_wag_recovery(double measured_prob, double base, double theta);

/// Runs the weighted-adder pipeline (encoder + weighted adder) and returns
/// the mean of the sum register divided by 2^n as the estimate. shots == 0
/// reads the expectation exactly from the state; otherwise the mean is
/// empirical over sampled shots.
EstimationResult weighted_adder_mean(const Pmf& pmf, const std::vector<std::uint64_t>& weights,
                                     std::uint64_t shots, std::uint64_t seed);

} // namespace qspread
