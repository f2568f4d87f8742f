// qspread — command-line driver for the spreading-based expectation
// estimator and its competing methods.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 capacity
// exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qspread/baselines.hpp"
#include "qspread/builders.hpp"
#include "qspread/compare.hpp"
#include "qspread/errors.hpp"
#include "qspread/estimation.hpp"
#include "qspread/finance.hpp"
#include "qspread/resources.hpp"
#include "qspread/serialize.hpp"
#include "qspread/state.hpp"
#include "qspread/verify.hpp"

namespace {

using namespace qspread;

constexpr double kPi = 3.14159265358979323846;

struct SourceOpts {
    std::string pmf_path;
    std::string builtin_name;
    bool use_bsm = false;
    BsmParams bsm;
};

struct OutputOpts {
    std::string path; // empty: stdout
    std::string format = "json";
};

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
    auto* pmf = cmd->add_option("--pmf", src.pmf_path, "Distribution JSON file {\"probs\": [...]}");
    auto* builtin = cmd->add_option("--builtin", src.builtin_name,
                                    "Named built-in distribution (sec2)");
    auto* bsm = cmd->add_flag("--bsm", src.use_bsm, "Discretized Black-Scholes-Merton distribution");
    pmf->excludes(builtin)->excludes(bsm);
    builtin->excludes(bsm);
    cmd->add_option("--grid-lo", src.bsm.grid_lo, "Price grid lower endpoint (with --bsm)");
    cmd->add_option("--grid-hi", src.bsm.grid_hi, "Price grid upper endpoint (with --bsm)");
    cmd->add_option("--bsm-qubits", src.bsm.qubits, "Value-register width for --bsm (default 3)");
    cmd->add_option("--s0", src.bsm.s0, "Initial price (with --bsm)");
    cmd->add_option("--sigma", src.bsm.sigma, "Volatility (with --bsm)");
    cmd->add_option("--rate", src.bsm.rate, "Risk-free rate (with --bsm)");
    cmd->add_option("--maturity", src.bsm.maturity, "Maturity in years (with --bsm)");
}

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--out", out.path, "Output file (default: stdout)");
    cmd->add_option("--format", out.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

Pmf resolve_pmf(const SourceOpts& src) {
    if (!src.pmf_path.empty()) return load_pmf_file(src.pmf_path);
    if (src.use_bsm) return discretize_pmf(src.bsm);
    if (!src.builtin_name.empty()) return builtin_pmf(src.builtin_name);
    return builtin_pmf("sec2"); // default input
}

void write_output(const std::string& text, const OutputOpts& out) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw InputError("cannot open output file '" + out.path + "'");
    f << text;
    if (!f) throw InputError("failed writing output file '" + out.path + "'");
}

std::uint64_t parse_shots(const std::string& text) {
    if (text == "exact") return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw InputError("--shots expects a count or 'exact', got '" + text + "'");
    }
}

// ---------------------------------------------------------------- compare

int cmd_compare(const SourceOpts& src, const OutputOpts& out, const std::string& methods_text,
                CompareOptions opts, const std::string& shots_text) {
    opts.shots = parse_shots(shots_text);
    const Pmf pmf = resolve_pmf(src);
    const std::vector<Method> methods = methods_from_string(methods_text);
    std::vector<CompareRow> rows = run_compare(pmf, methods, opts);
    if (src.use_bsm) {
        const auto [lo, hi] = resolved_grid(src.bsm);
        for (CompareRow& row : rows) {
            row.grid_lo = lo;
            row.grid_hi = hi;
        }
    }
    write_output(out.format == "csv" ? compare_rows_to_csv(rows) : compare_rows_to_json(rows),
                 out);
    return 0;
}

// -------------------------------------------------------------------- bsm

int cmd_bsm(const SourceOpts& src, const OutputOpts& out) {
    BsmParams params = src.bsm;
    const Pmf pmf = discretize_pmf(params);
    const auto [lo, hi] = resolved_grid(params);
    const double wag_index = ground_truth_wag(pmf, WagMode::Index);
    const double wag_price = ground_truth_wag(pmf, WagMode::Price);
    const double n_states = static_cast<double>(pmf.probs.size());

    if (out.format == "csv") {
        std::string text = "index,price,prob\n";
        for (std::size_t i = 0; i < pmf.probs.size(); ++i)
            text += std::to_string(i) + "," + format_double(pmf.values[i]) + "," +
                    format_double(pmf.probs[i]) + "\n";
        write_output(text, out);
        return 0;
    }

    // JSON form doubles as a loadable distribution file: the probs/values
    // keys match the --pmf input format, the rest is provenance.
    std::string text = "{\n  \"probs\": [";
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        text += (i ? ", " : "") + format_double(pmf.probs[i]);
    text += "],\n  \"values\": [";
    for (std::size_t i = 0; i < pmf.values.size(); ++i)
        text += (i ? ", " : "") + format_double(pmf.values[i]);
    text += "],\n";
    text += "  \"mu\": " + format_double(bsm_mu(params)) + ",\n";
    text += "  \"grid_lo\": " + format_double(lo) + ",\n";
    text += "  \"grid_hi\": " + format_double(hi) + ",\n";
    text += "  \"wag_index\": " + format_double(wag_index) + ",\n";
    text += "  \"wag_index_normalized\": " + format_double(wag_index / n_states) + ",\n";
    text += "  \"wag_price\": " + format_double(wag_price) + ",\n";
    text += std::string("  \"version\": \"") + kVersion + "\"\n}\n";
    write_output(text, out);
    return 0;
}

// -------------------------------------------------------------- resources

// The rotation method's calculation part in isolation (the encoder is
// common to every method, so scaling tables exclude it): one offset
// rotation plus one controlled rotation per value qubit.
Circuit rotation_calculation_part(int n) {
    Circuit c(n + 1);
    c.ry(n, kPi / 2.0);
    for (int j = 0; j < n; ++j) c.cry(j, n, 0.02 * std::ldexp(1.0, j));
    return c;
}

Circuit resource_circuit(const std::string& family, int n) {
    if (family == "ramp") return build_digital_ramp(make_comparator_layout(n));
    if (family == "pruned-comparator")
        return build_pruned_comparator(make_comparator_layout(n));
    if (family == "full-adder") return build_full_cuccaro_adder(make_comparator_layout(n));
    if (family == "adder-comparator")
        return build_adder_based_comparator(make_comparator_layout(n));
    if (family == "weighted-adder") {
        std::vector<std::uint64_t> weights(static_cast<std::size_t>(n));
        std::uint64_t total = 0;
        for (int j = 0; j < n; ++j) {
            weights[static_cast<std::size_t>(j)] = std::uint64_t{1} << j;
            total += weights[static_cast<std::size_t>(j)];
        }
        int m = 0;
        while ((std::uint64_t{1} << m) <= total) ++m;
        return build_weighted_adder(weights, make_weighted_adder_layout(n, m));
    }
    if (family == "rotation") return rotation_calculation_part(n);
    throw InputError("unknown circuit family '" + family + "'");
}

int cmd_resources(const OutputOpts& out, int n_min, int n_max) {
    if (n_min < 1 || n_max > 64 || n_min > n_max)
        throw InputError("resources: need 1 <= n-min <= n-max <= 64");

    const std::vector<std::string> families = {"ramp",        "pruned-comparator",
                                               "full-adder",  "adder-comparator",
                                               "weighted-adder", "rotation"};
    std::vector<ResourceRow> rows;
    std::vector<ResourceFit> fits;
    for (const std::string& family : families) {
        std::vector<double> ns, gates, depths;
        for (int n = n_min; n <= n_max; ++n) {
            const Circuit c = resource_circuit(family, n);
            const ResourceReport rep = resource_report(c);
            rows.push_back({family, n, rep.total_gates, rep.depth, rep.qubits});
            ns.push_back(static_cast<double>(n));
            gates.push_back(static_cast<double>(rep.total_gates));
            depths.push_back(static_cast<double>(rep.depth));
        }
        ResourceFit fit;
        fit.circuit = family;
        if (ns.size() >= 2) {
            try {
                const LinearFit g = fit_log_log(ns, gates);
                fit.gate_exponent = g.slope;
                fit.gate_r_squared = g.r_squared;
            } catch (const DomainError&) {
                // constant gate count (e.g. the ramp gained no structure)
                fit.gate_exponent = 0.0;
                fit.gate_r_squared = 1.0;
            }
            try {
                const LinearFit d = fit_linear(ns, depths);
                fit.depth_slope = d.slope;
                fit.depth_r_squared = d.r_squared;
            } catch (const DomainError&) {
                fit.depth_slope = 0.0;
                fit.depth_r_squared = 1.0;
            }
        }
        fits.push_back(fit);
    }
    write_output(out.format == "csv" ? resource_table_to_csv(rows, fits)
                                     : resource_table_to_json(rows, fits),
                 out);
    return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const OutputOpts& out, int max_qubits) {
    const std::vector<CheckResult> results = run_all_checks(max_qubits);
    bool all_pass = true;
    std::string text;
    if (out.format == "csv") {
        text = "check,pass,detail\n";
        for (const CheckResult& r : results) {
            text += r.name + "," + (r.pass ? "true" : "false") + ",\"" + r.detail + "\"\n";
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const CheckResult& r : results) {
            text += std::string(r.pass ? "PASS" : "FAIL") + "  " + r.name + ": " + r.detail + "\n";
            all_pass = all_pass && r.pass;
        }
        text += all_pass ? "all checks passed\n" : "CHECKS FAILED\n";
    }
    write_output(text, out);
    return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------- dump

int cmd_dump(const SourceOpts& src, const OutputOpts& out, const std::string& what, int n,
             double theta, int lut_bits) {
    Circuit c(1);
    if (what == "ds-oracle") {
        c = build_ds_oracle(resolve_pmf(src));
    } else if (what == "encoder") {
        c = build_amplitude_encoder(resolve_pmf(src));
    } else if (what == "rotation") {
        RotationConfig cfg;
        cfg.theta = theta;
        c = build_rotation_circuit(resolve_pmf(src), cfg);
    } else if (what == "digital-cal") {
        const Pmf pmf = resolve_pmf(src);
        DigitalCalibrationConfig cfg;
        cfg.lut_bits = lut_bits;
        cfg.domain = pricing_domain(pmf.probs.size(), kPi / 4.0, theta);
        c = build_digital_calibration_circuit(pmf, cfg);
    } else if (what == "grover") {
        const Circuit oracle = build_ds_oracle(resolve_pmf(src));
        c = build_grover_operator(oracle, oracle.layout().target);
    } else {
        c = resource_circuit(what, n); // arithmetic families take --n
    }
    write_output(out.format == "csv" ? circuit_to_text(c) : circuit_to_json(c), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spreading-based quantum expectation estimation toolkit"};
    app.require_subcommand(1);

    // compare
    auto* compare = app.add_subcommand("compare", "Run estimation methods and tabulate errors");
    SourceOpts cmp_src;
    OutputOpts cmp_out;
    std::string cmp_methods = "all";
    std::string cmp_shots = "exact";
    CompareOptions cmp_opts;
    double cmp_m_scale = -1.0;
    add_source_flags(compare, cmp_src);
    add_output_flags(compare, cmp_out);
    compare->add_option("--methods", cmp_methods,
                        "Comma-separated: ds,rotation,analog-cal,digital-cal,qwa or 'all'");
    compare->add_option("--theta", cmp_opts.theta, "Rotation step per index (radians)");
    auto* m_scale_opt =
        compare->add_option("--m-scale", cmp_m_scale, "Price-increment scale for analog-cal");
    compare->add_option("--lut-bits", cmp_opts.lut_bits, "Digital-calibration table bit width");
    compare->add_option("--shots", cmp_shots, "Sample count, or 'exact' for no sampled row");
    compare->add_option("--eval-qubits", cmp_opts.eval_qubits,
                        "Phase-estimation register width (0: skip)");
    compare->add_option("--seed", cmp_opts.seed, "Sampling seed");

    // bsm
    auto* bsm = app.add_subcommand("bsm", "Emit the discretized Black-Scholes-Merton distribution");
    SourceOpts bsm_src;
    OutputOpts bsm_out;
    add_source_flags(bsm, bsm_src);
    add_output_flags(bsm, bsm_out);

    // resources
    auto* resources = app.add_subcommand("resources", "Gate-count and depth scaling table");
    OutputOpts res_out;
    int res_n_min = 2, res_n_max = 12;
    add_output_flags(resources, res_out);
    resources->add_option("--n-min", res_n_min, "Smallest register width");
    resources->add_option("--n-max", res_n_max, "Largest register width (construction only)");

    // verify
    auto* verify = app.add_subcommand("verify", "Brute-force correctness checks");
    OutputOpts ver_out;
    int ver_max_qubits = 4;
    add_output_flags(verify, ver_out);
    verify->add_option("--max-qubits", ver_max_qubits, "Operand width cap for exhaustive checks");

    // dump
    auto* dump = app.add_subcommand("dump", "Emit a built circuit (JSON, or text via --format csv)");
    SourceOpts dump_src;
    OutputOpts dump_out;
    std::string dump_what = "ds-oracle";
    int dump_n = 3;
    double dump_theta = 0.01;
    int dump_lut_bits = 6;
    add_source_flags(dump, dump_src);
    add_output_flags(dump, dump_out);
    dump->add_option("--circuit", dump_what,
                     "ds-oracle | encoder | rotation | digital-cal | grover | ramp | "
                     "pruned-comparator | full-adder | adder-comparator | weighted-adder");
    dump->add_option("--n", dump_n, "Register width for arithmetic families");
    dump->add_option("--theta", dump_theta, "Rotation step for rotation/digital-cal");
    dump->add_option("--lut-bits", dump_lut_bits, "Table bit width for digital-cal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (compare->parsed()) {
            if (*m_scale_opt) cmp_opts.m_scale = cmp_m_scale;
            return cmd_compare(cmp_src, cmp_out, cmp_methods, cmp_opts, cmp_shots);
        }
        if (bsm->parsed()) return cmd_bsm(bsm_src, bsm_out);
        if (resources->parsed()) return cmd_resources(res_out, res_n_min, res_n_max);
        if (verify->parsed()) return cmd_verify(ver_out, ver_max_qubits);
        if (dump->parsed())
            return cmd_dump(dump_src, dump_out, dump_what, dump_n, dump_theta, dump_lut_bits);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
