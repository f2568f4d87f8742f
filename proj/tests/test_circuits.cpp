#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qspread/builders.hpp"
#include "qspread/errors.hpp"
#include "qspread/estimation.hpp"
#include "qspread/pmf.hpp"
#include "qspread/resources.hpp"
#include "qspread/state.hpp"
#include "qspread/verify.hpp"

using namespace qspread;

namespace {

Pmf random_pmf(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> w(std::size_t{1} << n);
    for (double& x : w) x = uni(rng);
    return pmf_from_weights(w);
}

Pmf delta_pmf(int n, std::size_t at) {
    std::vector<double> w(std::size_t{1} << n, 0.0);
    w[at] = 1.0;
    return pmf_from_weights(w);
}

double index_mean(const Pmf& pmf) {
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        acc += pmf.probs[i] * static_cast<double>(i);
    return acc;
}

// Output basis index after running `c` on basis input (a in value, b in ramp).
std::uint64_t run_on_basis(const Circuit& c, std::uint64_t a, std::uint64_t b) {
    const RegisterLayout& l = c.layout();
    Statevector s(c.num_qubits());
    Circuit prep(c.num_qubits());
    for (int i = 0; i < l.value_reg.width; ++i)
        if ((a >> i) & 1) prep.x(l.value_reg[i]);
    for (int i = 0; i < l.ramp_reg.width; ++i)
        if ((b >> i) & 1) prep.x(l.ramp_reg[i]);
    s.apply(prep);
    s.apply(c);
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx)
        if (std::norm(s.amplitude(idx)) > 0.5) return idx;
    return ~std::uint64_t{0};
}

} // namespace

TEST_CASE("digital ramp is one H per threshold wire") {
    const RegisterLayout l = make_comparator_layout(3);
    const Circuit c = build_digital_ramp(l);
    REQUIRE(c.gates().size() == 3);
    for (const Gate& g : c.gates()) REQUIRE(g.kind == GateKind::H);

    Statevector s(l.total_qubits);
    s.apply(c);
    for (int i = 0; i < 3; ++i)
        REQUIRE(s.marginal_probability(l.ramp_reg[i]) == doctest::Approx(0.5));
    REQUIRE(s.marginal_probability(l.value_reg[0]) == doctest::Approx(0.0));
}

TEST_CASE("pruned comparator matches the overflow predicate exhaustively") {
    for (int n = 1; n <= 4; ++n) {
        const CheckResult r = check_comparator_circuit(
            build_pruned_comparator(make_comparator_layout(n)), "comparator");
        CAPTURE(r.detail);
        REQUIRE(r.pass);
    }
}

TEST_CASE("corrupted majority ordering is caught by the truth-table check") {
    // Same wires as the real n=2 comparator but with the first majority
    // block's gates emitted in the wrong order.
    const RegisterLayout l = make_comparator_layout(2);
    Circuit bad(l.total_qubits);
    bad.set_layout(l);
    bad.ccx(l.carry_in, l.ramp_reg[0], l.value_reg[0]); // should come last
    bad.cx(l.value_reg[0], l.ramp_reg[0]);
    bad.cx(l.value_reg[0], l.carry_in);
    bad.cx(l.value_reg[1], l.ramp_reg[1]);
    bad.cx(l.value_reg[0], l.ramp_reg[1]);
    bad.ccx(l.ramp_reg[1], l.value_reg[0], l.value_reg[1]);
    bad.cx(l.value_reg[1], l.target);
    bad.ccx(l.ramp_reg[1], l.value_reg[0], l.value_reg[1]);
    bad.cx(l.value_reg[0], l.ramp_reg[1]);
    bad.cx(l.value_reg[1], l.ramp_reg[1]);
    bad.ccx(l.carry_in, l.ramp_reg[0], l.value_reg[0]);
    bad.cx(l.value_reg[0], l.carry_in);
    bad.cx(l.value_reg[0], l.ramp_reg[0]);

    const CheckResult r = check_comparator_circuit(bad, "corrupted");
    REQUIRE_FALSE(r.pass);
}

TEST_CASE("comparator on an encoded value against the uniform ramp") {
    // Value 5 against all eight thresholds: exceedance in exactly 5 of them.
    const RegisterLayout l = make_comparator_layout(3);
    Circuit c(l.total_qubits);
    c.set_layout(l);
    c.x(l.value_reg[0]);
    c.x(l.value_reg[2]);
    c.append(build_digital_ramp(l));
    c.append(build_pruned_comparator(l));
    Statevector s(l.total_qubits);
    s.apply(c);
    REQUIRE(s.marginal_probability(l.target) == doctest::Approx(5.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("full ripple adder computes a + b exhaustively") {
    for (int n = 1; n <= 4; ++n) {
        const RegisterLayout l = make_comparator_layout(n);
        const Circuit adder = build_full_cuccaro_adder(l);
        const std::uint64_t N = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < N; ++a)
            for (std::uint64_t b = 0; b < N; ++b) {
                std::uint64_t want = (a << l.value_reg.start) | (((a + b) % N) << l.ramp_reg.start);
                if (a + b >= N) want |= std::uint64_t{1} << l.target;
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(b);
                REQUIRE(run_on_basis(adder, a, b) == want);
            }
    }
}

TEST_CASE("arithmetic gate counts follow the closed formulas") {
    for (int n = 1; n <= 12; ++n) {
        const RegisterLayout l = make_comparator_layout(n);
        REQUIRE(build_pruned_comparator(l).gates().size() == std::size_t(6 * n + 1));
        REQUIRE(build_full_cuccaro_adder(l).gates().size() == std::size_t(6 * n + 1));
        // Comparator built the obvious way: add, copy carry, un-add.
        REQUIRE(build_adder_based_comparator(l).gates().size() == std::size_t(12 * n + 1));
    }
}

TEST_CASE("adder-based comparator agrees with the pruned one") {
    for (int n = 1; n <= 3; ++n) {
        const CheckResult r = check_comparator_circuit(
            build_adder_based_comparator(make_comparator_layout(n)), "adder-comparator");
        CAPTURE(r.detail);
        REQUIRE(r.pass);
    }
}

TEST_CASE("weighted adder accumulates the selected weights exhaustively") {
    const std::vector<std::uint64_t> weights = {1, 2, 4};
    const int n = 3, m = 3;
    const RegisterLayout l = make_weighted_adder_layout(n, m);
    const Circuit adder = build_weighted_adder(weights, l);
    for (std::uint64_t a = 0; a < 8; ++a) {
        std::uint64_t sum = 0;
        for (int j = 0; j < n; ++j)
            if ((a >> j) & 1) sum += weights[std::size_t(j)];
        const std::uint64_t want = (a << l.value_reg.start) | (sum << l.sum_reg->start);
        CAPTURE(a);
        REQUIRE(run_on_basis(adder, a, 0) == want);
    }

    // Irregular weights and a sum register wider than strictly needed.
    const std::vector<std::uint64_t> odd = {3, 0, 5};
    const RegisterLayout l2 = make_weighted_adder_layout(3, 4);
    const Circuit adder2 = build_weighted_adder(odd, l2);
    for (std::uint64_t a = 0; a < 8; ++a) {
        std::uint64_t sum = 0;
        for (int j = 0; j < 3; ++j)
            if ((a >> j) & 1) sum += odd[std::size_t(j)];
        const std::uint64_t want = (a << l2.value_reg.start) | (sum << l2.sum_reg->start);
        REQUIRE(run_on_basis(adder2, a, 0) == want);
    }
}

TEST_CASE("weighted adder gate count grows as n * (6m + 2) for binary weights") {
    for (int n = 2; n <= 10; ++n) {
        std::vector<std::uint64_t> weights(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) weights[std::size_t(j)] = std::uint64_t{1} << j;
        const int m = n; // bit width of 2^n - 1
        const Circuit c = build_weighted_adder(weights, make_weighted_adder_layout(n, m));
        REQUIRE(c.gates().size() == std::size_t(n) * std::size_t(6 * m + 2));
    }
}

TEST_CASE("weighted adder rejects a sum register that cannot hold the total") {
    const std::vector<std::uint64_t> weights = {3, 3, 3}; // total 9 needs 4 bits
    REQUIRE_THROWS_AS(build_weighted_adder(weights, make_weighted_adder_layout(3, 3)),
                      StructuralError);
}

TEST_CASE("amplitude encoder reproduces sqrt(p) exactly") {
    std::uint64_t seed = 1000;
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 7; ++trial) {
            const Pmf pmf = random_pmf(n, seed++);
            Statevector s(n);
            s.apply(build_amplitude_encoder(pmf));
            for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
                REQUIRE(std::abs(s.amplitude(i).imag()) < 1e-14);
                REQUIRE(s.amplitude(i).real() ==
                        doctest::Approx(std::sqrt(pmf.probs[i])).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("encoder handles the worked distribution and degenerate shapes") {
    const Pmf sec2 = builtin_pmf("sec2");
    Statevector s(3);
    s.apply(build_amplitude_encoder(sec2));
    for (std::size_t i = 0; i < 8; ++i) {
        const double want = (i == 1 || i == 2 || i == 4 || i == 5) ? 0.5 : 0.0;
        REQUIRE(std::abs(s.amplitude(i) - std::complex<double>{want, 0.0}) < 1e-12);
    }

    // Two equal states: a single RY(pi/2) on the only qubit.
    Pmf half;
    half.probs = {0.5, 0.5};
    const Circuit c = build_amplitude_encoder(half);
    REQUIRE(c.gates().size() == 1);
    REQUIRE(c.gates()[0].kind == GateKind::RY);
    REQUIRE(c.gates()[0].angle == doctest::Approx(3.14159265358979323846 / 2.0));

    // Mass pinned at |0>: every branch rotation is skipped.
    REQUIRE(build_amplitude_encoder(delta_pmf(3, 0)).gates().size() == 0);
}

TEST_CASE("spreading oracle equals the normalized index mean") {
    std::uint64_t seed = 2000;
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            const Pmf pmf = random_pmf(n, seed++);
            const Circuit oracle = build_ds_oracle(pmf);
            const double p = exact_probability(oracle, oracle.layout().target);
            const double want = index_mean(pmf) / static_cast<double>(pmf.probs.size());
            CAPTURE(n);
            CAPTURE(trial);
            REQUIRE(std::abs(p - want) < 1e-12);
        }
    }
}

TEST_CASE("spreading oracle on point masses") {
    const Circuit at0 = build_ds_oracle(delta_pmf(3, 0));
    REQUIRE(exact_probability(at0, at0.layout().target) == doctest::Approx(0.0));
    const Circuit at7 = build_ds_oracle(delta_pmf(3, 7));
    REQUIRE(exact_probability(at7, at7.layout().target) ==
            doctest::Approx(7.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("resource report counts, depth, and ancillas") {
    Circuit c(3);
    c.h(0);
    c.h(1);      // parallel with the first H
    c.cx(0, 1);  // must wait for both
    c.ry(2, 0.3);
    const ResourceReport r = resource_report(c);
    REQUIRE(r.total_gates == 4);
    REQUIRE(r.counts.at(GateKind::H) == 2);
    REQUIRE(r.counts.at(GateKind::CX) == 1);
    REQUIRE(r.depth == 2);
    REQUIRE(r.qubits == 3);

    const Circuit oracle = build_ds_oracle(builtin_pmf("sec2"));
    const ResourceReport ro = resource_report(oracle);
    REQUIRE(ro.qubits == 8);
    REQUIRE(ro.ancillas == 4); // ramp register plus carry wire
}

TEST_CASE("layout validation rejects overlaps and bad ranges") {
    RegisterLayout l;
    l.value_reg = {0, 2};
    l.ramp_reg = {1, 2}; // overlaps value
    l.total_qubits = 4;
    REQUIRE_THROWS_AS(l.validate(), StructuralError);

    RegisterLayout l2 = make_comparator_layout(2);
    l2.target = 99;
    REQUIRE_THROWS_AS(l2.validate(), StructuralError);

    REQUIRE_THROWS_AS(make_comparator_layout(0), StructuralError);
}

TEST_CASE("circuit append shifts wires and validates bounds") {
    Circuit inner(2);
    inner.cx(0, 1);
    Circuit outer(4);
    outer.append(inner, 2);
    REQUIRE(outer.gates()[0].controls[0] == 2);
    REQUIRE(outer.gates()[0].target == 3);
    REQUIRE_THROWS_AS(outer.append(inner, 3), StructuralError);
}

TEST_CASE("straight-line and log-log fits recover exact laws") {
    std::vector<double> x, y_lin, y_quad;
    for (int n = 2; n <= 10; ++n) {
        x.push_back(n);
        y_lin.push_back(3.0 * n + 1.0);
        y_quad.push_back(2.0 * n * n);
    }
    const LinearFit lin = fit_linear(x, y_lin);
    REQUIRE(lin.slope == doctest::Approx(3.0).epsilon(1e-12));
    REQUIRE(lin.intercept == doctest::Approx(1.0).epsilon(1e-10));
    REQUIRE(lin.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    const LinearFit quad = fit_log_log(x, y_quad);
    REQUIRE(quad.slope == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(quad.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    REQUIRE_THROWS_AS(fit_linear({1.0}, {1.0}), DomainError);
}
