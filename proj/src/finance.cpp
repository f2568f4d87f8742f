#include "qspread/finance.hpp"

#include <cmath>
#include <string>

#include "qspread/errors.hpp"
#include "qspread/state.hpp"

namespace qspread {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

void BsmParams::validate() const {
    if (!(s0 > 0.0)) throw InputError("bsm: s0 must be positive");
    if (!(sigma > 0.0)) throw InputError("bsm: sigma must be positive");
    if (!(maturity > 0.0)) throw InputError("bsm: maturity must be positive");
    if (qubits < 1 || qubits > kMaxQubits)
        throw CapacityError("bsm: qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
    if (has_explicit_grid()) {
        if (!(grid_lo > 0.0) || !(grid_hi > 0.0))
            throw InputError("bsm: grid endpoints must both be set and positive");
        if (!(grid_hi > grid_lo)) throw InputError("bsm: grid_hi must exceed grid_lo");
    }
}

double bsm_mu(const BsmParams& p) {
    return std::log(p.s0) + (p.rate - p.sigma * p.sigma / 2.0) * p.maturity;
}

double bsm_density(double s, const BsmParams& p) {
    if (!(s > 0.0)) throw DomainError("bsm density: price must be positive");
    const double mu = bsm_mu(p);
    const double var = p.sigma * p.sigma * p.maturity;
    const double d = std::log(s) - mu;
    return std::exp(-d * d / (2.0 * var)) / (s * std::sqrt(kTwoPi * var));
}

std::pair<double, double> default_grid(const BsmParams& p) {
    const double mu = bsm_mu(p);
    const double spread = 3.0 * p.sigma * std::sqrt(p.maturity);
    return {std::exp(mu - spread), std::exp(mu + spread)};
}

std::pair<double, double> resolved_grid(const BsmParams& p) {
    p.validate();
    return p.has_explicit_grid() ? std::pair{p.grid_lo, p.grid_hi} : default_grid(p);
}

Pmf discretize_pmf(const BsmParams& p) {
    const auto [lo, hi] = resolved_grid(p);
    const std::size_t n_states = std::size_t{1} << p.qubits;

    Pmf pmf;
    pmf.values.resize(n_states);
    pmf.probs.resize(n_states);
    const double step = (hi - lo) / static_cast<double>(n_states - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < n_states; ++i) {
        pmf.values[i] = lo + static_cast<double>(i) * step;
        pmf.probs[i] = bsm_density(pmf.values[i], p);
        total += pmf.probs[i];
    }
    for (double& q : pmf.probs) q /= total;
    pmf.validate();
    return pmf;
}

double ground_truth_wag(const Pmf& pmf, WagMode mode) {
    pmf.validate();
    if (mode == WagMode::Price && !pmf.has_values())
        throw StructuralError("ground truth: price mode requires grid values");
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        acc += pmf.probs[i] *
               (mode == WagMode::Index ? static_cast<double>(i) : pmf.values[i]);
    return acc;
}

} // namespace qspread
