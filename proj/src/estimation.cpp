#include "qspread/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qspread/errors.hpp"
#include "qspread/state.hpp"

namespace qspread {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Inverse Fourier transform on the top `m` qubits, applied as one dense
// subspace transform (exact, no phase-gate synthesis):
//   out[(z << w) | x] = (1/sqrt(M)) * sum_y exp(-2*pi*i*z*y/M) in[(y << w) | x]
void inverse_fourier_on_high_qubits(Statevector& s, int w, int m) {
    using c64 = std::complex<double>;
    const std::uint64_t M = std::uint64_t{1} << m;
    const std::uint64_t W = std::uint64_t{1} << w;
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(M));

    std::vector<c64> twiddle(M);
    for (std::uint64_t k = 0; k < M; ++k)
        twiddle[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(M));

    c64* amps = s.data();
    std::vector<c64> column(M);
    for (std::uint64_t x = 0; x < W; ++x) {
        for (std::uint64_t y = 0; y < M; ++y) column[y] = amps[(y << w) | x];
        for (std::uint64_t z = 0; z < M; ++z) {
            c64 acc{0.0, 0.0};
            for (std::uint64_t y = 0; y < M; ++y) acc += twiddle[(z * y) % M] * column[y];
            amps[(z << w) | x] = acc * inv_sqrt_m;
        }
    }
}

std::vector<double> eval_register_distribution(const Statevector& s, int w, int m) {
    const std::uint64_t M = std::uint64_t{1} << m;
    const std::uint64_t W = std::uint64_t{1} << w;
    std::vector<double> p(M, 0.0);
    for (std::uint64_t y = 0; y < M; ++y) {
        double acc = 0.0;
        for (std::uint64_t x = 0; x < W; ++x) acc += std::norm(s.amplitude((y << w) | x));
        p[y] = acc;
    }
    return p;
}

std::uint64_t most_probable_outcome(const std::vector<double>& p) {
    std::uint64_t best = 0;
    for (std::uint64_t y = 1; y < p.size(); ++y)
        if (p[y] > p[best]) best = y; // strict: ties keep the smallest y
    return best;
}

std::uint64_t sampled_mode(const std::vector<double>& p, std::uint64_t shots,
                           std::uint64_t seed) {
    std::vector<double> cumulative(p.size());
    double acc = 0.0;
    for (std::size_t y = 0; y < p.size(); ++y) {
        acc += p[y];
        cumulative[y] = acc;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> counts(p.size(), 0);
    for (std::uint64_t t = 0; t < shots; ++t) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto y = static_cast<std::size_t>(
            std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                     static_cast<std::ptrdiff_t>(p.size()) - 1));
        ++counts[y];
    }
    std::uint64_t best = 0;
    for (std::uint64_t y = 1; y < counts.size(); ++y)
        if (counts[y] > counts[best]) best = y;
    return best;
}

} // namespace

double relative_error_pct(double estimate, double truth) {
    if (truth == 0.0) return std::abs(estimate) * 100.0;
    return std::abs(estimate - truth) / std::abs(truth) * 100.0;
}

double exact_probability(const Circuit& oracle, int target) {
    Statevector s(oracle.num_qubits());
    s.apply(oracle);
    return s.marginal_probability(target);
}

double shot_probability(const Circuit& oracle, int target, std::uint64_t shots,
                        std::uint64_t seed) {
    if (shots == 0) throw DomainError("shot_probability: shots must be positive");
    Statevector s(oracle.num_qubits());
    s.apply(oracle);
    const auto counts = s.sample_counts(shots, seed);
    std::uint64_t ones = 0;
    for (const auto& [idx, count] : counts)
        if ((idx >> target) & 1) ones += count;
    return static_cast<double>(ones) / static_cast<double>(shots);
}

Circuit build_grover_operator(const Circuit& oracle, int target) {
    const int w = oracle.num_qubits();
    if (target < 0 || target >= w) throw StructuralError("grover: target outside oracle width");

    Circuit q(w);
    q.z(target); // phase flip on marked states
    q.append(oracle.inverse());
    for (int i = 0; i < w; ++i) q.x(i); // reflection about |0...0>
    {
        std::vector<int> ctrls;
        for (int i = 0; i + 1 < w; ++i) ctrls.push_back(i);
        q.mcz(ctrls, w - 1);
    }
    for (int i = 0; i < w; ++i) q.x(i);
    q.append(oracle);
    // Global -1 (Z X Z X = -I on any single wire) so the operator's
    // eigenphases are exactly +-2*arcsin(sqrt(a)).
    q.z(target);
    q.x(target);
    q.z(target);
    q.x(target);
    return q;
}

EstimationResult canonical_qae(const Circuit& oracle, int target, const QaeConfig& cfg,
                               const Postprocess& post) {
    const int w = oracle.num_qubits();
    const int m = cfg.eval_qubits;
    if (m < 1) throw DomainError("qae: need at least one eval qubit");
    if (w + m > kMaxQubits)
        throw CapacityError("qae: oracle width " + std::to_string(w) + " plus " +
                            std::to_string(m) + " eval qubits exceeds the " +
                            std::to_string(kMaxQubits) + "-qubit limit");

    const Circuit grover = build_grover_operator(oracle, target);

    Statevector s(w + m);
    {
        // State preparation on the low wires; the eval register sits above.
        Circuit wide(w + m);
        wide.append(oracle);
        s.apply(wide);
    }
    for (int j = 0; j < m; ++j) s.apply(Gate::h(w + j));

    // Controlled powers Q^(2^j), gate by gate with eval qubit w+j as an
    // extra control.
    for (int j = 0; j < m; ++j) {
        const std::uint64_t reps = std::uint64_t{1} << j;
        for (std::uint64_t r = 0; r < reps; ++r)
            for (const Gate& g : grover.gates()) s.apply_controlled(g, w + j);
    }

    inverse_fourier_on_high_qubits(s, w, m);

    const std::vector<double> p = eval_register_distribution(s, w, m);
    const std::uint64_t y =
        cfg.shots == 0 ? most_probable_outcome(p) : sampled_mode(p, cfg.shots, cfg.seed);

    const double M = static_cast<double>(std::uint64_t{1} << m);
    const double phase = kPi * static_cast<double>(y) / M;
    const double a_star = std::sin(phase) * std::sin(phase);

    EstimationResult r;
    r.method = post.method;
    r.estimator = "qae";
    r.probability = a_star;
    r.wag = post.wag_from_prob ? post.wag_from_prob(a_star) : a_star;
    r.ground_truth = post.ground_truth;
    r.relative_error_pct = relative_error_pct(r.wag, post.ground_truth);
    r.resources = resource_report(oracle);
    r.seed = cfg.seed;
    r.shots = cfg.shots;
    r.eval_qubits = m;
    return r;
}

} // namespace qspread
