#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qspread/errors.hpp"

namespace qspread {

/// Discrete probability mass function over 2^n states, with an optional
/// per-state value grid (asset prices, payoffs, ...). When `values` is empty
/// the state index itself is the value.
struct Pmf {
    std::vector<double> probs;
    std::vector<double> values;

    std::size_t size() const { return probs.size(); }
    int num_qubits() const;
    bool has_values() const { return !values.empty(); }

    double value_at(std::size_t i) const {
        return has_values() ? values[i] : static_cast<double>(i);
    }

    /// Throws StructuralError when the length is not a power of two (or
    /// values length mismatches), DomainError for negative entries or a total
    /// away from 1 by more than 1e-12.
    void validate() const;

    /// True when `values` forms a uniform grid (within 1e-9 of equal steps).
    bool has_uniform_grid() const;
};

/// Named built-in distributions. "sec2" is the bundled 8-state example
/// [0, .25, .25, 0, .25, .25, 0, 0] used throughout the tests and docs.
Pmf builtin_pmf(const std::string& name);

/// Normalizes a non-negative weight vector into a Pmf (values left empty).
Pmf pmf_from_weights(std::vector<double> weights);

} // namespace qspread
