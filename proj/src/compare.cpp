#include "qspread/compare.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "qspread/baselines.hpp"
#include "qspread/builders.hpp"
#include "qspread/errors.hpp"

namespace qspread {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct MethodSpec {
    std::string tag;
    Circuit oracle;
    int target = 0;
    std::function<double(double)> wag_from_prob;
    double ground_truth = 0.0;
};

EstimationResult readout_row(const MethodSpec& spec, const std::string& estimator,
                             double probability, const CompareOptions& opts) {
    EstimationResult r;
    r.method = spec.tag;
    r.estimator = estimator;
    r.probability = probability;
    r.wag = spec.wag_from_prob(probability);
    r.ground_truth = spec.ground_truth;
    r.relative_error_pct = relative_error_pct(r.wag, spec.ground_truth);
    r.resources = resource_report(spec.oracle);
    r.seed = opts.seed;
    r.shots = estimator == "shots" ? opts.shots : 0;
    r.eval_qubits = 0;
    return r;
}

CompareRow finish_row(EstimationResult est, double n_states, int qae_instances) {
    CompareRow row;
    row.est = std::move(est);
    row.wag_normalized = row.est.wag / n_states;
    row.ground_truth_normalized = row.est.ground_truth / n_states;
    row.qae_instances = qae_instances;
    return row;
}

std::vector<CompareRow> run_single_target_method(const Pmf& pmf, const MethodSpec& spec,
                                                 const CompareOptions& opts) {
    const double n_states = static_cast<double>(pmf.probs.size());
    std::vector<CompareRow> rows;

    rows.push_back(
        finish_row(readout_row(spec, "exact", exact_probability(spec.oracle, spec.target), opts),
                   n_states, 1));
    if (opts.eval_qubits > 0) {
        QaeConfig qcfg;
        qcfg.eval_qubits = opts.eval_qubits;
        qcfg.shots = 0; // exact readout of the eval register
        qcfg.seed = opts.seed;
        Postprocess post{spec.tag, spec.wag_from_prob, spec.ground_truth};
        rows.push_back(
            finish_row(canonical_qae(spec.oracle, spec.target, qcfg, post), n_states, 1));
    }
    if (opts.shots > 0) {
        const double p = shot_probability(spec.oracle, spec.target, opts.shots, opts.seed);
        rows.push_back(finish_row(readout_row(spec, "shots", p, opts), n_states, 1));
    }
    return rows;
}

double index_ground_truth(const Pmf& pmf) {
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        acc += pmf.probs[i] * static_cast<double>(i);
    return acc;
}

void stamp(std::vector<CompareRow>& rows, std::optional<double> theta,
           std::optional<double> m_scale, std::optional<int> lut_bits) {
    for (CompareRow& row : rows) {
        row.theta = theta;
        row.m_scale = m_scale;
        row.lut_bits = lut_bits;
    }
}

} // namespace

const char* to_string(Method m) {
    switch (m) {
    case Method::Ds: return "ds";
    case Method::Rotation: return "rotation";
    case Method::AnalogCal: return "analog-cal";
    case Method::DigitalCal: return "digital-cal";
    case Method::Qwa: return "qwa";
    }
    throw StructuralError("unknown method enum value");
}

Method method_from_string(const std::string& name) {
    if (name == "ds") return Method::Ds;
    if (name == "rotation") return Method::Rotation;
    if (name == "analog-cal") return Method::AnalogCal;
    if (name == "digital-cal") return Method::DigitalCal;
    if (name == "qwa") return Method::Qwa;
    throw InputError("unknown method '" + name +
                     "' (expected ds, rotation, analog-cal, digital-cal, or qwa)");
}

std::vector<Method> methods_from_string(const std::string& list) {
    if (list == "all")
        return {Method::Ds, Method::Rotation, Method::AnalogCal, Method::DigitalCal, Method::Qwa};
    std::vector<Method> methods;
    std::size_t begin = 0;
    while (begin <= list.size()) {
        const std::size_t comma = list.find(',', begin);
        const std::string token =
            list.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        if (token.empty()) throw InputError("empty method name in list '" + list + "'");
        methods.push_back(method_from_string(token));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (methods.empty()) throw InputError("no methods requested");
    return methods;
}

std::vector<CompareRow> run_method(const Pmf& pmf, Method method, const CompareOptions& opts) {
    pmf.validate();
    const double truth = index_ground_truth(pmf);
    const double n_states = static_cast<double>(pmf.probs.size());

    switch (method) {
    case Method::Ds: {
        MethodSpec spec;
        spec.tag = to_string(method);
        spec.oracle = build_ds_oracle(pmf);
        spec.target = spec.oracle.layout().target;
        spec.wag_from_prob = [n_states](double p) { return p * n_states; };
        spec.ground_truth = truth;
        auto rows = run_single_target_method(pmf, spec, opts);
        stamp(rows, std::nullopt, std::nullopt, std::nullopt);
        return rows;
    }
    case Method::Rotation:
    case Method::AnalogCal: {
        // The calibrated variant scales the price increment in the value map
        // (price_i = base + m*i*theta) while the circuit keeps unit-scale
        // angles; the index estimate inverts that affine map, so its value
        // and error coincide with the plain rotation method's. The m-scaled
        // circuit itself is available through RotationConfig::price_scale_m.
        RotationConfig cfg;
        cfg.theta = opts.theta;
        cfg.base_angle = opts.base_angle;
        cfg.price_scale_m = 1.0;
        const double m_recorded =
            opts.m_scale.value_or(method == Method::AnalogCal ? kPi / 2.0 : 1.0);

        MethodSpec spec;
        spec.tag = to_string(method);
        spec.oracle = build_rotation_circuit(pmf, cfg);
        spec.target = pmf.num_qubits();
        spec.wag_from_prob = [cfg](double p) { return taylor_wag_recovery(p, cfg); };
        spec.ground_truth = truth;
        auto rows = run_single_target_method(pmf, spec, opts);
        stamp(rows, opts.theta, m_recorded, std::nullopt);
        return rows;
    }
    case Method::DigitalCal: {
        DigitalCalibrationConfig cfg;
        cfg.lut_bits = opts.lut_bits;
        cfg.domain = pricing_domain(pmf.probs.size(), opts.base_angle, opts.theta);
        const double base = opts.base_angle;
        const double theta = opts.theta;

        MethodSpec spec;
        spec.tag = to_string(method);
        spec.oracle = build_digital_calibration_circuit(pmf, cfg);
        spec.target = pmf.num_qubits();
        spec.wag_from_prob = [base, theta](double p) {
            return calibration_wag_recovery(p, base, theta);
        };
        spec.ground_truth = truth;
        auto rows = run_single_target_method(pmf, spec, opts);
        stamp(rows, opts.theta, std::nullopt, opts.lut_bits);
        return rows;
    }
    case Method::Qwa: {
        const int n = pmf.num_qubits();
        std::vector<std::uint64_t> weights(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) weights[static_cast<std::size_t>(j)] = std::uint64_t{1} << j;

        std::vector<CompareRow> rows;
        EstimationResult exact = weighted_adder_mean(pmf, weights, 0, opts.seed);
        // The adder lives on n + 2m + 1 wires; its m-bit sum register would
        // need one phase-estimation instance per output bit.
        const int sum_width = (exact.resources.qubits - n - 1) / 2;
        rows.push_back(finish_row(std::move(exact), n_states, sum_width));
        if (opts.shots > 0)
            rows.push_back(finish_row(weighted_adder_mean(pmf, weights, opts.shots, opts.seed),
                                      n_states, sum_width));
        stamp(rows, std::nullopt, std::nullopt, std::nullopt);
        return rows;
    }
    }
    throw StructuralError("unknown method enum value");
}

std::vector<CompareRow> run_compare(const Pmf& pmf, const std::vector<Method>& methods,
                                    const CompareOptions& opts) {
    std::vector<CompareRow> rows;
    for (Method m : methods) {
        auto part = run_method(pmf, m, opts);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    std::sort(rows.begin(), rows.end(), [](const CompareRow& a, const CompareRow& b) {
        if (a.est.method != b.est.method) return a.est.method < b.est.method;
        return a.est.estimator < b.est.estimator;
    });
    return rows;
}

} // namespace qspread
