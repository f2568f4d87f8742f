#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qspread/circuit.hpp"

namespace qspread {

/// Static cost summary of a circuit.
struct ResourceReport {
    std::map<GateKind, std::uint64_t> counts;
    std::uint64_t total_gates = 0;
    /// Longest chain under the partial order where two gates conflict iff
    /// they share any qubit.
    std::uint64_t depth = 0;
    int qubits = 0;
    /// Qubits outside the layout's value register and target wire.
    int ancillas = 0;
};

ResourceReport resource_report(const Circuit& c);

/// Least-squares line fit y = slope*x + intercept with r-squared.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LinearFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys);

/// Power-law exponent: linear fit of log(y) against log(x).
LinearFit fit_log_log(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace qspread
