#pragma once

#include <utility>

#include "qspread/pmf.hpp"

namespace qspread {

/// Black-Scholes-Merton experiment parameters. Defaults reproduce the desk
/// experiment: s0 = 2.0, sigma = 0.10, r = 0.04, T = 300/365 years, 3 value
/// qubits. grid_lo/grid_hi <= 0 means "use the +-3 sigma default grid".
struct BsmParams {
    double s0 = 2.0;
    double sigma = 0.10;
    double rate = 0.04;
    double maturity = 300.0 / 365.0;
    int qubits = 3;
    double grid_lo = 0.0;
    double grid_hi = 0.0;

    bool has_explicit_grid() const { return grid_lo > 0.0 || grid_hi > 0.0; }
    void validate() const;
};

/// Log-normal drift: ln(s0) + (rate - sigma^2/2) * maturity.
double bsm_mu(const BsmParams& p);

/// Log-normal terminal-price density
///   1 / (s * sigma * sqrt(2*pi*T)) * exp(-(ln s - mu)^2 / (2 * sigma^2 * T)),
/// throws DomainError for s <= 0.
double bsm_density(double s, const BsmParams& p);

/// Default price grid endpoints: exp(mu -+ 3 * sigma * sqrt(T)), i.e. +-3
/// standard deviations of ln S_T.
std::pair<double, double> default_grid(const BsmParams& p);

/// The grid actually used: explicit endpoints when given, default otherwise.
std::pair<double, double> resolved_grid(const BsmParams& p);

/// Uniform price grid values[i] = lo + i * (hi - lo)/(2^n - 1) with
/// probs[i] = density(values[i]) normalized to sum 1.
Pmf discretize_pmf(const BsmParams& p);

enum class WagMode { Index, Price };

/// Index mode: sum_i p_i * i. Price mode: sum_i p_i * values[i] (requires
/// values; StructuralError otherwise).
double ground_truth_wag(const Pmf& pmf, WagMode mode);

} // namespace qspread
