#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qspread/estimation.hpp"
#include "qspread/pmf.hpp"

namespace qspread {

enum class Method { Ds, Rotation, AnalogCal, DigitalCal, Qwa };

const char* to_string(Method m);

/// Parses "ds" | "rotation" | "analog-cal" | "digital-cal" | "qwa";
/// anything else throws InputError.
Method method_from_string(const std::string& name);

/// Comma-separated method list; "all" expands to every method.
std::vector<Method> methods_from_string(const std::string& list);

struct CompareOptions {
    double theta = 0.01;
    double base_angle = 0.78539816339744831; // pi/4
    /// Price-increment scale for the calibrated method; unset uses the
    /// per-method default (rotation 1, analog calibration pi/2).
    std::optional<double> m_scale;
    int lut_bits = 6;
    std::uint64_t shots = 0; // 0: no sampled row
    int eval_qubits = 0;     // 0: no phase-estimation row
    std::uint64_t seed = 1234;
};

/// One output row: a base estimate plus the normalized (divide-by-2^n) view
/// and the per-method parameter provenance. Fields that do not apply to a
/// method stay unset and serialize as null/empty.
struct CompareRow {
    EstimationResult est;
    double wag_normalized = 0.0;
    double ground_truth_normalized = 0.0;
    /// Phase-estimation instances needed to read the method's output: 1 for
    /// single-target-qubit methods, the sum-register width for the weighted
    /// adder (its multi-bit output is not consolidated into one qubit).
    int qae_instances = 1;
    std::optional<double> theta;
    std::optional<double> m_scale;
    std::optional<int> lut_bits;
    std::optional<double> grid_lo; // filled by callers that priced on a grid
    std::optional<double> grid_hi;
};

/// Runs one method on the distribution. Always emits the exact-readout row;
/// adds a phase-estimation row when opts.eval_qubits > 0 (not for the
/// weighted adder, whose multi-bit output has no single-qubit estimate) and
/// a sampled row when opts.shots > 0.
std::vector<CompareRow> run_method(const Pmf& pmf, Method method, const CompareOptions& opts);

/// Runs every requested method and returns rows in canonical order:
/// sorted by (method tag, estimator tag).
std::vector<CompareRow> run_compare(const Pmf& pmf, const std::vector<Method>& methods,
                                    const CompareOptions& opts);

} // namespace qspread
