#include "qspread/verify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "qspread/builders.hpp"
#include "qspread/estimation.hpp"
#include "qspread/pmf.hpp"
#include "qspread/state.hpp"

namespace qspread {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string describe(std::uint64_t a, std::uint64_t k, std::uint64_t got_index,
                     std::uint64_t want_index, double mass) {
    std::ostringstream out;
    out << "input a=" << a << " k=" << k << ": expected basis index " << want_index << ", got "
        << got_index << " (probability " << mass << ")";
    return out.str();
}

// Applies `circuit` to the basis state with value register = a and ramp
// register = k, returning the index of the dominant output basis state.
std::uint64_t basis_output(const Circuit& circuit, const RegisterLayout& l, std::uint64_t a,
                           std::uint64_t k, double& mass) {
    Statevector s(circuit.num_qubits());
    Circuit prep(circuit.num_qubits());
    for (int i = 0; i < l.value_reg.width; ++i)
        if ((a >> i) & 1) prep.x(l.value_reg[i]);
    for (int i = 0; i < l.ramp_reg.width; ++i)
        if ((k >> i) & 1) prep.x(l.ramp_reg[i]);
    s.apply(prep);
    s.apply(circuit);

    std::uint64_t best = 0;
    double best_p = -1.0;
    const std::uint64_t dim = std::uint64_t{1} << circuit.num_qubits();
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        const double p = std::norm(s.amplitude(idx));
        if (p > best_p) {
            best_p = p;
            best = idx;
        }
    }
    mass = best_p;
    return best;
}

CheckResult check_adder_circuit(const Circuit& circuit, const std::string& name) {
    const RegisterLayout& l = circuit.layout();
    const int n = l.value_reg.width;
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < N; ++a) {
        for (std::uint64_t b = 0; b < N; ++b) {
            const std::uint64_t sum = a + b;
            std::uint64_t want = (a << l.value_reg.start) | ((sum % N) << l.ramp_reg.start);
            if (sum >= N) want |= std::uint64_t{1} << l.target;
            double mass = 0.0;
            const std::uint64_t got = basis_output(circuit, l, a, b, mass);
            if (got != want || mass < 1.0 - 1e-9)
                return {name, false, describe(a, b, got, want, mass)};
        }
    }
    return {name, true, "all " + std::to_string(N * N) + " input pairs match classical addition"};
}

CheckResult check_spreading_identity(int max_qubits) {
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int n = 2; n <= std::min(max_qubits, 3); ++n) {
        const std::size_t n_states = std::size_t{1} << n;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> w(n_states);
            for (double& x : w) x = uni(rng);
            const Pmf pmf = pmf_from_weights(w);
            const Circuit oracle = build_ds_oracle(pmf);
            const double p = exact_probability(oracle, oracle.layout().target);
            double truth = 0.0;
            for (std::size_t i = 0; i < n_states; ++i)
                truth += pmf.probs[i] * static_cast<double>(i);
            truth /= static_cast<double>(n_states);
            if (std::abs(p - truth) > 1e-12) {
                std::ostringstream out;
                out << "n=" << n << " trial=" << trial << ": |" << p << " - " << truth
                    << "| > 1e-12";
                return {"spreading-identity", false, out.str()};
            }
        }
    }
    return {"spreading-identity", true,
            "target probability equals sum(p_i * i)/2^n within 1e-12 on random distributions"};
}

CheckResult check_encoder_exactness() {
    std::mt19937_64 rng(20240902);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int n = 1; n <= 4; ++n) {
        const std::size_t n_states = std::size_t{1} << n;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> w(n_states);
            for (double& x : w) x = uni(rng);
            const Pmf pmf = pmf_from_weights(w);
            Statevector s(n);
            s.apply(build_amplitude_encoder(pmf));
            for (std::size_t i = 0; i < n_states; ++i) {
                const std::complex<double> amp = s.amplitude(i);
                if (std::abs(amp.imag()) > 1e-12 ||
                    std::abs(amp.real() - std::sqrt(pmf.probs[i])) > 1e-10) {
                    std::ostringstream out;
                    out << "n=" << n << " state " << i << ": amplitude " << amp.real()
                        << " vs sqrt(p)=" << std::sqrt(pmf.probs[i]);
                    return {"encoder-exactness", false, out.str()};
                }
            }
        }
    }
    return {"encoder-exactness", true, "amplitudes match sqrt(p_i) within 1e-10"};
}

CheckResult check_telescoping() {
    const int n = 3;
    const RegisterLayout l = make_comparator_layout(n);
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < N; ++a) {
        Circuit c(l.total_qubits);
        c.set_layout(l);
        for (int i = 0; i < n; ++i)
            if ((a >> i) & 1) c.x(l.value_reg[i]);
        c.append(build_digital_ramp(l));
        c.append(build_pruned_comparator(l));
        Statevector s(l.total_qubits);
        s.apply(c);
        const double p = s.marginal_probability(l.target);
        const double want = static_cast<double>(a) / static_cast<double>(N);
        if (std::abs(p - want) > 1e-12) {
            std::ostringstream out;
            out << "a=" << a << ": threshold-exceedance probability " << p << " != " << want;
            return {"ramp-telescoping", false, out.str()};
        }
    }
    return {"ramp-telescoping", true,
            "exceedance count over the uniform ramp equals the encoded value for all inputs"};
}

CheckResult check_qae_grid_bound() {
    const Pmf pmf = builtin_pmf("sec2");
    const Circuit oracle = build_ds_oracle(pmf);
    const double a = 0.375;
    for (int m = 3; m <= 5; ++m) {
        QaeConfig cfg;
        cfg.eval_qubits = m;
        Postprocess post{"ds", [](double p) { return p; }, a};
        const EstimationResult r = canonical_qae(oracle, oracle.layout().target, cfg, post);
        const double bound =
            kPi / std::ldexp(1.0, m) + kPi * kPi / std::ldexp(1.0, 2 * m);
        if (std::abs(r.probability - a) > bound) {
            std::ostringstream out;
            out << "m=" << m << ": |" << r.probability << " - " << a << "| > grid bound "
                << bound;
            return {"qae-grid-bound", false, out.str()};
        }
    }
    return {"qae-grid-bound", true,
            "exact-readout estimate within pi/2^m + pi^2/2^(2m) of the true probability"};
}

} // namespace

CheckResult check_comparator_circuit(const Circuit& circuit, const std::string& name) {
    const RegisterLayout& l = circuit.layout();
    const int n = l.value_reg.width;
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < N; ++a) {
        for (std::uint64_t k = 0; k < N; ++k) {
            // Output: inputs restored, target flipped exactly when a + k >= N.
            std::uint64_t want = (a << l.value_reg.start) | (k << l.ramp_reg.start);
            if (a + k >= N) want |= std::uint64_t{1} << l.target;
            double mass = 0.0;
            const std::uint64_t got = basis_output(circuit, l, a, k, mass);
            if (got != want || mass < 1.0 - 1e-9)
                return {name, false, describe(a, k, got, want, mass)};
        }
    }
    return {name, true,
            "all " + std::to_string(N * N) + " input pairs match the overflow predicate"};
}

std::vector<CheckResult> run_all_checks(int max_qubits) {
    if (max_qubits < 1) max_qubits = 1;
    if (max_qubits > 5) max_qubits = 5;

    std::vector<CheckResult> results;
    for (int n = 1; n <= max_qubits; ++n) {
        results.push_back(check_comparator_circuit(
            build_pruned_comparator(make_comparator_layout(n)),
            "comparator-exhaustive-n" + std::to_string(n)));
    }
    for (int n = 1; n <= max_qubits; ++n) {
        results.push_back(check_adder_circuit(
            build_full_cuccaro_adder(make_comparator_layout(n)),
            "adder-exhaustive-n" + std::to_string(n)));
    }
    results.push_back(check_spreading_identity(max_qubits));
    results.push_back(check_encoder_exactness());
    results.push_back(check_telescoping());
    results.push_back(check_qae_grid_bound());
    return results;
}

} // namespace qspread
