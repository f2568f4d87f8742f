#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qspread/circuit.hpp"
#include "qspread/resources.hpp"

namespace qspread {

/// Phase-estimation settings. shots == 0 means exact readout (argmax of the
/// eval-register distribution); otherwise the readout is sampled.
struct QaeConfig {
    int eval_qubits = 5;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// One estimate row. `probability` is the estimated good-state probability
/// (the normalized weighted average for the spreading method), `wag` the
/// recovered weighted average in the experiment's value units.
struct EstimationResult {
    std::string method;     // ds | rotation | analog-cal | digital-cal | qwa
    std::string estimator;  // exact | qae | shots
    double probability = 0.0;
    double wag = 0.0;
    double ground_truth = 0.0;
    double relative_error_pct = 0.0;
    ResourceReport resources;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    int eval_qubits = 0;
};

/// How a method turns a measured probability back into its weighted average.
struct Postprocess {
    std::string method;
    std::function<double(double)> wag_from_prob;
    double ground_truth = 0.0;
};

/// |estimate - truth| / |truth| * 100; for truth == 0 falls back to
/// |estimate| * 100 (absolute, documented edge case).
double relative_error_pct(double estimate, double truth);

/// Applies the oracle to |0...0> and returns the target's one-probability.
double exact_probability(const Circuit& oracle, int target);

/// Applies the oracle, samples `shots` basis indices, and returns the
/// fraction with the target bit set.
double shot_probability(const Circuit& oracle, int target, std::uint64_t shots,
                        std::uint64_t seed);

/// Amplification operator Q = A S0 A^dag S_chi as a gate list:
///   S_chi = Z on the target (phase flip on marked states),
///   S0    = X-all / MCZ / X-all (reflection about |0...0|>),
/// followed by a 4-gate tail (Z X Z X on the target wire) supplying the
/// global -1 so Q's eigenphases are exactly +-2*arcsin(sqrt(a)), which the
/// phase-estimation readout below assumes.
Circuit build_grover_operator(const Circuit& oracle, int target);

/// Textbook phase-estimation amplitude estimation: eval register in uniform
/// superposition, controlled Q^(2^j) applied gate by gate, inverse Fourier
/// transform on the eval register (performed as an exact subspace transform),
/// readout y, estimate a* = sin^2(pi * y / 2^m).
///
/// Exact readout takes the most probable eval outcome (smallest y on ties);
/// sampled readout draws `shots` outcomes and takes the mode. The most
/// probable outcome obeys |a* - a| <= pi/2^m + pi^2/2^(2m).
EstimationResult canonical_qae(const Circuit& oracle, int target, const QaeConfig& cfg,
                               const Postprocess& post);

} // namespace qspread
