#include "qspread/pmf.hpp"

#include <cmath>
#include <numeric>

namespace qspread {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

int Pmf::num_qubits() const {
    int n = 0;
    while ((std::size_t{1} << n) < probs.size()) ++n;
    return n;
}

void Pmf::validate() const {
    if (!is_power_of_two(probs.size()) || probs.size() < 2)
        throw StructuralError("pmf: length must be a power of two (>= 2)");
    if (has_values() && values.size() != probs.size())
        throw StructuralError("pmf: values length must match probs length");
    double total = 0.0;
    for (double p : probs) {
        if (p < 0.0 || !std::isfinite(p)) throw DomainError("pmf: probabilities must be >= 0");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw DomainError("pmf: probabilities must sum to 1 (got " + std::to_string(total) + ")");
}

bool Pmf::has_uniform_grid() const {
    if (!has_values() || values.size() < 2) return false;
    const double step = values[1] - values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (std::abs((values[i] - values[i - 1]) - step) > 1e-9) return false;
    }
    return true;
}

Pmf builtin_pmf(const std::string& name) {
    if (name == "sec2") {
        Pmf pmf;
        pmf.probs = {0.0, 0.25, 0.25, 0.0, 0.25, 0.25, 0.0, 0.0};
        return pmf;
    }
    throw InputError("pmf: unknown builtin '" + name + "'");
}

Pmf pmf_from_weights(std::vector<double> weights) {
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (total <= 0.0) throw DomainError("pmf: weights must have positive total");
    for (double& w : weights) w /= total;
    Pmf pmf;
    pmf.probs = std::move(weights);
    pmf.validate();
    return pmf;
}

} // namespace qspread
