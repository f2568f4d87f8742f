#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qspread/baselines.hpp"
#include "qspread/compare.hpp"
#include "qspread/errors.hpp"
#include "qspread/estimation.hpp"
#include "qspread/pmf.hpp"

using namespace qspread;

namespace {

constexpr double kPi = 3.14159265358979323846;

Pmf random_pmf(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> w(std::size_t{1} << n);
    for (double& x : w) x = uni(rng);
    return pmf_from_weights(w);
}

// Analytic law the rotation circuit must realize on its target wire.
double rotation_marginal_closed_form(const Pmf& pmf, const RotationConfig& cfg) {
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
        const double s =
            std::sin(cfg.base_angle + cfg.price_scale_m * static_cast<double>(i) * cfg.theta);
        acc += pmf.probs[i] * s * s;
    }
    return acc;
}

double rotation_exact(const Pmf& pmf, const RotationConfig& cfg) {
    const Circuit c = build_rotation_circuit(pmf, cfg);
    return exact_probability(c, pmf.num_qubits());
}

double digital_cal_error_pct(const Pmf& pmf, int lut_bits, double base, double theta) {
    DigitalCalibrationConfig cfg;
    cfg.lut_bits = lut_bits;
    cfg.domain = pricing_domain(pmf.probs.size(), base, theta);
    const Circuit c = build_digital_calibration_circuit(pmf, cfg);
    const double p = exact_probability(c, pmf.num_qubits());
    const double wag = calibration_wag_recovery(p, base, theta);
    double truth = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        truth += pmf.probs[i] * static_cast<double>(i);
    return std::abs(wag - truth) / truth * 100.0;
}

} // namespace

TEST_CASE("rotation circuit realizes the sin^2 marginal law") {
    std::uint64_t seed = 3000;
    for (double theta : {0.005, 0.01, 0.02}) {
        for (int n = 2; n <= 3; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                const Pmf pmf = random_pmf(n, seed++);
                RotationConfig cfg;
                cfg.theta = theta;
                REQUIRE(rotation_exact(pmf, cfg) ==
                        doctest::Approx(rotation_marginal_closed_form(pmf, cfg)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("rotation marginal on the worked distribution, unit scale") {
    // Closed form: sum over i in {1,2,4,5} of 0.25 * sin^2(pi/4 + 0.01*i).
    const Pmf pmf = builtin_pmf("sec2");
    RotationConfig cfg; // theta 0.01, base pi/4, m 1
    const double p = rotation_exact(pmf, cfg);
    REQUIRE(p == doctest::Approx(0.52996701393699597).epsilon(1e-12));
    REQUIRE(p == doctest::Approx(rotation_marginal_closed_form(pmf, cfg)).epsilon(1e-12));
}

TEST_CASE("rotation marginal on the worked distribution, pi/2 scale") {
    const Pmf pmf = builtin_pmf("sec2");
    RotationConfig cfg;
    cfg.price_scale_m = kPi / 2.0;
    const double p = rotation_exact(pmf, cfg);
    REQUIRE(p == doctest::Approx(0.54699612215149710).epsilon(1e-10));
    REQUIRE(p == doctest::Approx(rotation_marginal_closed_form(pmf, cfg)).epsilon(1e-12));
}

TEST_CASE("rotation marginal degenerates to 1/2 without index dependence") {
    RotationConfig flat;
    flat.theta = 0.0;
    REQUIRE(rotation_exact(builtin_pmf("sec2"), flat) == doctest::Approx(0.5).epsilon(1e-12));

    Pmf delta;
    delta.probs = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    RotationConfig cfg;
    REQUIRE(rotation_exact(delta, cfg) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("first-order recovery inverts the linearized marginal") {
    RotationConfig cfg;
    REQUIRE(taylor_wag_recovery(0.53, cfg) == doctest::Approx(3.0).epsilon(1e-12));
    REQUIRE(taylor_wag_recovery(0.5, cfg) == doctest::Approx(0.0));

    // The worked distribution's systematic (curvature-only) error.
    const double p = rotation_exact(builtin_pmf("sec2"), cfg);
    const double wag = taylor_wag_recovery(p, cfg);
    REQUIRE(wag == doctest::Approx(2.9967013936995968).epsilon(1e-10));
    REQUIRE(std::abs(wag - 3.0) / 3.0 * 100.0 ==
            doctest::Approx(0.10995354334677465).epsilon(1e-8));
}

TEST_CASE("probability error is magnified by 1/theta in the recovered value") {
    RotationConfig cfg; // theta = 0.01
    const double p = 0.52;
    const double shift = taylor_wag_recovery(p + 1e-4, cfg) - taylor_wag_recovery(p, cfg);
    REQUIRE(shift == doctest::Approx(1e-2).epsilon(1e-9));
}

TEST_CASE("pricing map is affine in the index") {
    const auto x = pricing_domain(4, 0.25, 0.01);
    REQUIRE(x.size() == 4);
    REQUIRE(x[0] == doctest::Approx(0.25));
    REQUIRE(x[3] == doctest::Approx(0.28));
}

TEST_CASE("angle quantization rounds to the table grid") {
    const double step2 = (kPi / 2.0) / 4.0;
    REQUIRE(quantize_angle(0.3, 2) == doctest::Approx(step2).epsilon(1e-12));
    REQUIRE(quantize_angle(0.0, 8) == doctest::Approx(0.0));
    // Large tables keep the angle nearly unchanged.
    REQUIRE(quantize_angle(1.1, 20) == doctest::Approx(1.1).epsilon(1e-5));
    REQUIRE_THROWS_AS(quantize_angle(0.3, 0), DomainError);
}

TEST_CASE("table-driven calibration is exact in the fine-grained limit") {
    const Pmf pmf = builtin_pmf("sec2");
    REQUIRE(digital_cal_error_pct(pmf, 20, kPi / 4.0, 0.01) < 0.01);
    REQUIRE(digital_cal_error_pct(pmf, 24, kPi / 4.0, 0.01) < 1e-3);
}

TEST_CASE("table bit-width sweep reproduces the quantization-error curve") {
    // Frozen closed-form sweep on the worked distribution (base pi/4,
    // theta 0.01); the error is quantization-dominated and highly
    // non-monotone step to step, vanishing only in the wide-table limit.
    const Pmf pmf = builtin_pmf("sec2");
    REQUIRE(digital_cal_error_pct(pmf, 2, kPi / 4.0, 0.01) ==
            doctest::Approx(127.1841).epsilon(1e-4));
    REQUIRE(digital_cal_error_pct(pmf, 4, kPi / 4.0, 0.01) ==
            doctest::Approx(0.9036).epsilon(1e-3));
    REQUIRE(digital_cal_error_pct(pmf, 5, kPi / 4.0, 0.01) ==
            doctest::Approx(26.8480).epsilon(1e-4));
    REQUIRE(digital_cal_error_pct(pmf, 6, kPi / 4.0, 0.01) ==
            doctest::Approx(10.7644).epsilon(1e-4));

    // Coarse tables break the estimate badly; fine tables fix it.
    REQUIRE(digital_cal_error_pct(pmf, 2, kPi / 4.0, 0.01) > 5.0);
    REQUIRE(digital_cal_error_pct(pmf, 3, kPi / 4.0, 0.01) > 5.0);
    REQUIRE(digital_cal_error_pct(pmf, 12, kPi / 4.0, 0.01) < 0.2);
}

TEST_CASE("calibration circuit rejects malformed domains") {
    const Pmf pmf = builtin_pmf("sec2");
    DigitalCalibrationConfig cfg;
    cfg.domain = {0.1, 0.2}; // wrong size
    REQUIRE_THROWS_AS(build_digital_calibration_circuit(pmf, cfg), StructuralError);

    cfg.domain = pricing_domain(8, 0.99, 0.01); // walks past 1
    REQUIRE_THROWS_AS(build_digital_calibration_circuit(pmf, cfg), DomainError);
}

TEST_CASE("calibrated and plain rotation estimates coincide") {
    // The price-increment calibration acts on the value map, which the index
    // recovery inverts again, so probability, recovered value, and error all
    // match the unscaled rotation method row for row.
    const Pmf pmf = builtin_pmf("sec2");
    CompareOptions opts;
    const auto rot = run_method(pmf, Method::Rotation, opts);
    const auto cal = run_method(pmf, Method::AnalogCal, opts);
    REQUIRE(rot.size() == cal.size());
    for (std::size_t i = 0; i < rot.size(); ++i) {
        REQUIRE(cal[i].est.probability == rot[i].est.probability);
        REQUIRE(cal[i].est.wag == rot[i].est.wag);
        REQUIRE(cal[i].est.relative_error_pct == rot[i].est.relative_error_pct);
    }
    REQUIRE(cal[0].m_scale.value() == doctest::Approx(kPi / 2.0));
    REQUIRE(rot[0].m_scale.value() == doctest::Approx(1.0));
}

TEST_CASE("weighted-adder mean is exact in expectation readout") {
    const Pmf pmf = builtin_pmf("sec2");
    const std::vector<std::uint64_t> weights = {1, 2, 4};
    const EstimationResult r = weighted_adder_mean(pmf, weights, 0, 0);
    REQUIRE(r.wag == doctest::Approx(3.0).epsilon(1e-12));
    REQUIRE(r.probability == doctest::Approx(0.375).epsilon(1e-12));
    REQUIRE(r.estimator == "exact");
    REQUIRE(r.relative_error_pct < 1e-10);
}

TEST_CASE("weighted-adder sampling is deterministic and unbiased-ish") {
    const Pmf pmf = builtin_pmf("sec2");
    const std::vector<std::uint64_t> weights = {1, 2, 4};
    const EstimationResult a = weighted_adder_mean(pmf, weights, 200000, 9);
    const EstimationResult b = weighted_adder_mean(pmf, weights, 200000, 9);
    REQUIRE(a.wag == b.wag);
    REQUIRE(a.estimator == "shots");
    // sigma of the sum is ~1.58, so 200k shots give ~0.0035 standard error.
    REQUIRE(a.wag == doctest::Approx(3.0).epsilon(0.02));

    Pmf delta;
    delta.probs = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    REQUIRE(weighted_adder_mean(delta, weights, 1000, 3).wag == 0.0);
}

TEST_CASE("weighted-adder rejects mismatched weight lists") {
    const Pmf pmf = builtin_pmf("sec2");
    REQUIRE_THROWS_AS(weighted_adder_mean(pmf, {1, 2}, 0, 0), StructuralError);
}
