#pragma once

#include <string>
#include <vector>

#include "qspread/circuit.hpp"

namespace qspread {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Exhaustive truth-table check of a comparator-shaped circuit on a
/// comparator layout: for every basis input (a, k) the target must flip
/// exactly when a + k >= 2^n and every other wire must be restored. The
/// circuit is a parameter so a deliberately corrupted circuit can be used
/// as a negative control.
CheckResult check_comparator_circuit(const Circuit& circuit, const std::string& name);

/// Runs the brute-force suite: comparator and adder truth tables up to
/// `max_qubits` wires per operand register, the spreading identity on
/// random distributions, encoder exactness, the ramp-count telescoping
/// identity, and the phase-estimation grid bound.
std::vector<CheckResult> run_all_checks(int max_qubits = 4);

} // namespace qspread
