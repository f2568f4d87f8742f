#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qspread/circuit.hpp"
#include "qspread/compare.hpp"
#include "qspread/pmf.hpp"

namespace qspread {

inline constexpr const char* kVersion = "0.1.0";

/// Full-precision (17 significant digits) decimal form; round-trips exactly.
std::string format_double(double v);

/// Line-oriented circuit listing:
///   qubits N
///   KIND q[target] (q[c0] q[c1] ...) angle
/// with the control list present only for controlled gates and the angle
/// only for rotations.
std::string circuit_to_text(const Circuit& c);

/// {"num_qubits": N, "gates": [{"kind": ..., "controls": [...],
///  "target": ..., "angle": ...}, ...]} — angle present only for rotations.
std::string circuit_to_json(const Circuit& c);

/// Loads {"probs": [...], "values": [...](optional)} from a JSON file.
/// Unreadable files or malformed documents throw InputError; the
/// distribution itself is validated (power-of-two length, normalization).
Pmf load_pmf_file(const std::string& path);
Pmf pmf_from_json_text(const std::string& text);

/// Comparison rows as a JSON array / CSV table with a frozen field order:
/// method, estimator, probability, wag, wag_normalized, ground_truth,
/// ground_truth_normalized, relative_error_pct, gate_count, depth, qubits,
/// ancillas, qae_instances, theta, m_scale, lut_bits, shots, eval_qubits,
/// seed, grid_lo, grid_hi, version. Inapplicable fields are JSON null / CSV
/// empty. Output is byte-deterministic for a fixed row list.
std::string compare_rows_to_json(const std::vector<CompareRow>& rows);
std::string compare_rows_to_csv(const std::vector<CompareRow>& rows);

/// Per-size circuit cost row for scaling reports.
struct ResourceRow {
    std::string circuit;
    int n = 0;
    std::uint64_t gates = 0;
    std::uint64_t depth = 0;
    int qubits = 0;
};

/// Fitted growth summary for one circuit family: log2(gates) vs log2(n)
/// slope (growth exponent) and the straight-line depth fit.
struct ResourceFit {
    std::string circuit;
    double gate_exponent = 0.0;
    double gate_r_squared = 0.0;
    double depth_slope = 0.0;
    double depth_r_squared = 0.0;
};

std::string resource_table_to_json(const std::vector<ResourceRow>& rows,
                                   const std::vector<ResourceFit>& fits);
std::string resource_table_to_csv(const std::vector<ResourceRow>& rows,
                                  const std::vector<ResourceFit>& fits);

} // namespace qspread
