#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "qspread/circuit.hpp"
#include "qspread/compare.hpp"
#include "qspread/errors.hpp"
#include "qspread/pmf.hpp"
#include "qspread/serialize.hpp"

using namespace qspread;

TEST_CASE("format_double: shortest-correct decimal forms") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(3.0) == "3");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1e22) == "1e+22");
}

TEST_CASE("format_double round-trips every double exactly") {
    std::vector<double> samples = {3.141592653589793, 1.0 / 3.0, 0.1,
                                   9.87e-15, -2.5e9, 0.72191430384761657};
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> uni(-1e6, 1e6);
    for (int i = 0; i < 50; ++i) samples.push_back(uni(rng));

    for (double x : samples) {
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

namespace {

Circuit golden_circuit() {
    Circuit c(3);
    c.h(0);
    c.x(2);
    c.cx(0, 1);
    c.cry(1, 2, 0.5);
    c.mcx({0, 1}, 2);
    c.ry(1, -0.25);
    return c;
}

} // namespace

TEST_CASE("circuit text listing is byte-frozen") {
    const char* expected =
        "qubits 3\n"
        "H q[0]\n"
        "X q[2]\n"
        "CX q[1] (q[0])\n"
        "CRY q[2] (q[1]) 0.5\n"
        "MCX q[2] (q[0] q[1])\n"
        "RY q[1] -0.25\n";
    CHECK(circuit_to_text(golden_circuit()) == expected);

    CHECK(circuit_to_text(Circuit(2)) == "qubits 2\n");
}

TEST_CASE("circuit JSON document is byte-frozen") {
    Circuit c(2);
    c.h(0);
    c.cry(0, 1, 0.5);
    const char* expected = R"({
  "num_qubits": 2,
  "gates": [
    {
      "kind": "H",
      "controls": [],
      "target": 0
    },
    {
      "kind": "CRY",
      "controls": [
        0
      ],
      "target": 1,
      "angle": 0.5
    }
  ]
}
)";
    CHECK(circuit_to_json(c) == expected);
}

namespace {

// Two synthetic rows: one with every optional unset, one with all of them
// populated. All numbers are dyadic (or short decimals) so the printed forms
// are unambiguous.
std::vector<CompareRow> golden_rows() {
    CompareRow bare;
    bare.est.method = "ds";
    bare.est.estimator = "exact";
    bare.est.probability = 0.5;
    bare.est.wag = 4.0;
    bare.est.ground_truth = 4.0;
    bare.est.relative_error_pct = 0.0;
    bare.est.resources.total_gates = 7;
    bare.est.resources.depth = 3;
    bare.est.resources.qubits = 4;
    bare.est.resources.ancillas = 1;
    bare.wag_normalized = 0.5;
    bare.ground_truth_normalized = 0.5;

    CompareRow full;
    full.est.method = "rotation";
    full.est.estimator = "shots";
    full.est.probability = 0.25;
    full.est.wag = 2.5;
    full.est.ground_truth = 2.0;
    full.est.relative_error_pct = 25.0;
    full.est.resources.total_gates = 100;
    full.est.resources.depth = 50;
    full.est.resources.qubits = 5;
    full.est.resources.ancillas = 2;
    full.est.shots = 1000;
    full.est.eval_qubits = 4;
    full.est.seed = 42;
    full.wag_normalized = 0.3125;
    full.ground_truth_normalized = 0.25;
    full.qae_instances = 3;
    full.theta = 0.01;
    full.m_scale = 0.5;
    full.lut_bits = 6;
    full.grid_lo = 1.25;
    full.grid_hi = 2.5;

    return {bare, full};
}

} // namespace

TEST_CASE("comparison rows: frozen CSV layout") {
    const char* expected =
        "method,estimator,probability,wag,wag_normalized,ground_truth,"
        "ground_truth_normalized,relative_error_pct,gate_count,depth,qubits,ancillas,"
        "qae_instances,theta,m_scale,lut_bits,shots,eval_qubits,seed,grid_lo,grid_hi,"
        "version\n"
        "ds,exact,0.5,4,0.5,4,0.5,0,7,3,4,1,1,,,,0,0,0,,,0.1.0\n"
        "rotation,shots,0.25,2.5,0.3125,2,0.25,25,100,50,5,2,3,0.01,0.5,6,1000,4,42,"
        "1.25,2.5,0.1.0\n";
    CHECK(compare_rows_to_csv(golden_rows()) == expected);
}

TEST_CASE("comparison rows: frozen JSON layout") {
    const char* expected = R"([
  {
    "method": "ds",
    "estimator": "exact",
    "probability": 0.5,
    "wag": 4,
    "wag_normalized": 0.5,
    "ground_truth": 4,
    "ground_truth_normalized": 0.5,
    "relative_error_pct": 0,
    "gate_count": 7,
    "depth": 3,
    "qubits": 4,
    "ancillas": 1,
    "qae_instances": 1,
    "theta": null,
    "m_scale": null,
    "lut_bits": null,
    "shots": 0,
    "eval_qubits": 0,
    "seed": 0,
    "grid_lo": null,
    "grid_hi": null,
    "version": "0.1.0"
  },
  {
    "method": "rotation",
    "estimator": "shots",
    "probability": 0.25,
    "wag": 2.5,
    "wag_normalized": 0.3125,
    "ground_truth": 2,
    "ground_truth_normalized": 0.25,
    "relative_error_pct": 25,
    "gate_count": 100,
    "depth": 50,
    "qubits": 5,
    "ancillas": 2,
    "qae_instances": 3,
    "theta": 0.01,
    "m_scale": 0.5,
    "lut_bits": 6,
    "shots": 1000,
    "eval_qubits": 4,
    "seed": 42,
    "grid_lo": 1.25,
    "grid_hi": 2.5,
    "version": "0.1.0"
  }
]
)";
    CHECK(compare_rows_to_json(golden_rows()) == expected);
}

TEST_CASE("resource tables: frozen JSON and CSV layouts") {
    std::vector<ResourceRow> rows = {{"ramp", 2, 2, 1, 2}};
    std::vector<ResourceFit> fits = {{"ramp", 1.0, 1.0, 0.0, 1.0}};

    const char* expected_json = R"({
  "version": "0.1.0",
  "rows": [
    {
      "circuit": "ramp",
      "n": 2,
      "gates": 2,
      "depth": 1,
      "qubits": 2
    }
  ],
  "fits": [
    {
      "circuit": "ramp",
      "gate_exponent": 1,
      "gate_r_squared": 1,
      "depth_slope": 0,
      "depth_r_squared": 1
    }
  ]
}
)";
    CHECK(resource_table_to_json(rows, fits) == expected_json);

    const char* expected_csv =
        "record,circuit,n,gates,depth,qubits,gate_exponent,gate_r_squared,"
        "depth_slope,depth_r_squared\n"
        "count,ramp,2,2,1,2,,,,\n"
        "fit,ramp,,,,,1,1,0,1\n";
    CHECK(resource_table_to_csv(rows, fits) == expected_csv);
}

TEST_CASE("pmf JSON parsing: accepted documents") {
    const Pmf plain = pmf_from_json_text(R"({"probs": [0.25, 0.25, 0.25, 0.25]})");
    REQUIRE(plain.size() == 4);
    CHECK_FALSE(plain.has_values());
    CHECK(plain.probs[2] == 0.25);

    const Pmf priced =
        pmf_from_json_text(R"({"probs": [0.5, 0.5], "values": [1.0, 2.0]})");
    REQUIRE(priced.has_values());
    CHECK(priced.values[1] == 2.0);

    // Extra keys are ignored, so richer documents (e.g. the discretization
    // report emitted by the CLI) load directly as distributions.
    const Pmf rich = pmf_from_json_text(
        R"({"probs": [0.5, 0.5], "values": [1.0, 2.0],
            "mu": 0.7, "wag_index": 0.5, "version": "0.1.0"})");
    CHECK(rich.size() == 2);
}

TEST_CASE("pmf JSON parsing: rejected documents") {
    // Malformed JSON.
    CHECK_THROWS_AS(pmf_from_json_text("{probs: ["), InputError);
    // Not an object / missing or non-array probs.
    CHECK_THROWS_AS(pmf_from_json_text("[0.5, 0.5]"), InputError);
    CHECK_THROWS_AS(pmf_from_json_text(R"({"values": [1, 2]})"), InputError);
    CHECK_THROWS_AS(pmf_from_json_text(R"({"probs": 0.5})"), InputError);
    // Non-numeric entries.
    CHECK_THROWS_AS(pmf_from_json_text(R"({"probs": ["a", "b"]})"), InputError);
    // values length mismatch.
    CHECK_THROWS_AS(
        pmf_from_json_text(R"({"probs": [0.5, 0.5], "values": [1.0]})"),
        InputError);
    // Distribution-level failures are rewrapped as input errors: length not a
    // power of two, unnormalized, negative mass.
    CHECK_THROWS_AS(pmf_from_json_text(R"({"probs": [0.5, 0.3, 0.2]})"),
                    InputError);
    CHECK_THROWS_AS(pmf_from_json_text(R"({"probs": [0.5, 0.6]})"), InputError);
    CHECK_THROWS_AS(pmf_from_json_text(R"({"probs": [1.5, -0.5]})"), InputError);
}

TEST_CASE("pmf files: round trip and missing-file error") {
    CHECK_THROWS_AS(load_pmf_file("definitely/not/a/file.json"), InputError);

    const std::string path = "pmf_roundtrip_test.json";
    {
        std::ofstream out(path);
        out << R"({"probs": [0.125, 0.375, 0.375, 0.125], "values": [10, 20, 30, 40]})";
    }
    const Pmf pmf = load_pmf_file(path);
    std::remove(path.c_str());

    REQUIRE(pmf.size() == 4);
    CHECK(pmf.probs[1] == 0.375);
    REQUIRE(pmf.has_values());
    CHECK(pmf.values[3] == 40.0);
    CHECK(pmf.has_uniform_grid());
}
