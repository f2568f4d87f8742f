#include "qspread/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qspread/errors.hpp"

namespace qspread {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

// Tiny append-only writer producing canonical output: insertion-ordered
// keys, %.17g numbers, two-space indentation. Used for all output documents
// so byte determinism does not depend on a library's print routine.
class JsonBuilder {
  public:
    explicit JsonBuilder(int indent = 0) : indent_(indent) {}

    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array() { open('['); }
    void end_array() { close(']'); }

    void key(const std::string& k) {
        comma_and_newline();
        out_ += '"';
        out_ += json_escape(k);
        out_ += "\": ";
        pending_value_ = true;
    }

    void value(const std::string& s) { raw('"' + json_escape(s) + '"'); }
    void value(const char* s) { value(std::string(s)); }
    void value(double v) { raw(format_double(v)); }
    void value(std::uint64_t v) { raw(std::to_string(v)); }
    void value(int v) { raw(std::to_string(v)); }
    void null() { raw("null"); }

    std::string str() const { return out_; }

  private:
    void open(char c) {
        comma_and_newline();
        out_ += c;
        ++indent_;
        fresh_scope_ = true;
    }

    void close(char c) {
        --indent_;
        if (!fresh_scope_) {
            out_ += '\n';
            out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
        }
        out_ += c;
        fresh_scope_ = false;
    }

    void raw(const std::string& token) {
        comma_and_newline();
        out_ += token;
    }

    void comma_and_newline() {
        if (pending_value_) {
            pending_value_ = false;
            return; // value goes right after "key": on the same line
        }
        if (out_.empty()) {
            fresh_scope_ = false;
            return;
        }
        if (fresh_scope_) {
            fresh_scope_ = false;
        } else {
            out_ += ',';
        }
        out_ += '\n';
        out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
    }

    std::string out_;
    int indent_ = 0;
    bool pending_value_ = false;
    bool fresh_scope_ = false;
};

void write_row_fields(JsonBuilder& j, const CompareRow& row) {
    const EstimationResult& e = row.est;
    j.key("method");
    j.value(e.method);
    j.key("estimator");
    j.value(e.estimator);
    j.key("probability");
    j.value(e.probability);
    j.key("wag");
    j.value(e.wag);
    j.key("wag_normalized");
    j.value(row.wag_normalized);
    j.key("ground_truth");
    j.value(e.ground_truth);
    j.key("ground_truth_normalized");
    j.value(row.ground_truth_normalized);
    j.key("relative_error_pct");
    j.value(e.relative_error_pct);
    j.key("gate_count");
    j.value(e.resources.total_gates);
    j.key("depth");
    j.value(e.resources.depth);
    j.key("qubits");
    j.value(e.resources.qubits);
    j.key("ancillas");
    j.value(e.resources.ancillas);
    j.key("qae_instances");
    j.value(row.qae_instances);
    j.key("theta");
    row.theta ? j.value(*row.theta) : j.null();
    j.key("m_scale");
    row.m_scale ? j.value(*row.m_scale) : j.null();
    j.key("lut_bits");
    row.lut_bits ? j.value(*row.lut_bits) : j.null();
    j.key("shots");
    j.value(e.shots);
    j.key("eval_qubits");
    j.value(e.eval_qubits);
    j.key("seed");
    j.value(e.seed);
    j.key("grid_lo");
    row.grid_lo ? j.value(*row.grid_lo) : j.null();
    j.key("grid_hi");
    row.grid_hi ? j.value(*row.grid_hi) : j.null();
    j.key("version");
    j.value(kVersion);
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string circuit_to_text(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits() << '\n';
    for (const Gate& g : c.gates()) {
        out << to_string(g.kind) << " q[" << g.target << ']';
        if (!g.controls.empty()) {
            out << " (";
            for (std::size_t i = 0; i < g.controls.size(); ++i) {
                if (i) out << ' ';
                out << "q[" << g.controls[i] << ']';
            }
            out << ')';
        }
        if (g.is_rotation()) out << ' ' << format_double(g.angle);
        out << '\n';
    }
    return out.str();
}

std::string circuit_to_json(const Circuit& c) {
    JsonBuilder j;
    j.begin_object();
    j.key("num_qubits");
    j.value(c.num_qubits());
    j.key("gates");
    j.begin_array();
    for (const Gate& g : c.gates()) {
        j.begin_object();
        j.key("kind");
        j.value(to_string(g.kind));
        j.key("controls");
        j.begin_array();
        for (int q : g.controls) j.value(q);
        j.end_array();
        j.key("target");
        j.value(g.target);
        if (g.is_rotation()) {
            j.key("angle");
            j.value(g.angle);
        }
        j.end_object();
    }
    j.end_array();
    j.end_object();
    return j.str() + "\n";
}

Pmf pmf_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("pmf: malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("probs") || !doc["probs"].is_array())
        throw InputError("pmf: expected an object with a \"probs\" array");

    Pmf pmf;
    try {
        pmf.probs = doc["probs"].get<std::vector<double>>();
        if (doc.contains("values")) {
            if (!doc["values"].is_array())
                throw InputError("pmf: \"values\" must be an array");
            pmf.values = doc["values"].get<std::vector<double>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("pmf: non-numeric entry: ") + e.what());
    }
    if (pmf.has_values() && pmf.values.size() != pmf.probs.size())
        throw InputError("pmf: \"values\" length must match \"probs\" length");
    try {
        pmf.validate();
    } catch (const Error& e) {
        throw InputError(std::string("pmf: ") + e.what());
    }
    return pmf;
}

Pmf load_pmf_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("pmf: cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return pmf_from_json_text(buf.str());
}

std::string compare_rows_to_json(const std::vector<CompareRow>& rows) {
    JsonBuilder j;
    j.begin_array();
    for (const CompareRow& row : rows) {
        j.begin_object();
        write_row_fields(j, row);
        j.end_object();
    }
    j.end_array();
    return j.str() + "\n";
}

std::string compare_rows_to_csv(const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    out << "method,estimator,probability,wag,wag_normalized,ground_truth,"
           "ground_truth_normalized,relative_error_pct,gate_count,depth,qubits,ancillas,"
           "qae_instances,theta,m_scale,lut_bits,shots,eval_qubits,seed,grid_lo,grid_hi,"
           "version\n";
    for (const CompareRow& row : rows) {
        const EstimationResult& e = row.est;
        out << e.method << ',' << e.estimator << ',' << format_double(e.probability) << ','
            << format_double(e.wag) << ',' << format_double(row.wag_normalized) << ','
            << format_double(e.ground_truth) << ','
            << format_double(row.ground_truth_normalized) << ','
            << format_double(e.relative_error_pct) << ',' << e.resources.total_gates << ','
            << e.resources.depth << ',' << e.resources.qubits << ',' << e.resources.ancillas
            << ',' << row.qae_instances << ',';
        if (row.theta) out << format_double(*row.theta);
        out << ',';
        if (row.m_scale) out << format_double(*row.m_scale);
        out << ',';
        if (row.lut_bits) out << *row.lut_bits;
        out << ',' << e.shots << ',' << e.eval_qubits << ',' << e.seed << ',';
        if (row.grid_lo) out << format_double(*row.grid_lo);
        out << ',';
        if (row.grid_hi) out << format_double(*row.grid_hi);
        out << ',' << kVersion << '\n';
    }
    return out.str();
}

std::string resource_table_to_json(const std::vector<ResourceRow>& rows,
                                   const std::vector<ResourceFit>& fits) {
    JsonBuilder j;
    j.begin_object();
    j.key("version");
    j.value(kVersion);
    j.key("rows");
    j.begin_array();
    for (const ResourceRow& r : rows) {
        j.begin_object();
        j.key("circuit");
        j.value(r.circuit);
        j.key("n");
        j.value(r.n);
        j.key("gates");
        j.value(r.gates);
        j.key("depth");
        j.value(r.depth);
        j.key("qubits");
        j.value(r.qubits);
        j.end_object();
    }
    j.end_array();
    j.key("fits");
    j.begin_array();
    for (const ResourceFit& f : fits) {
        j.begin_object();
        j.key("circuit");
        j.value(f.circuit);
        j.key("gate_exponent");
        j.value(f.gate_exponent);
        j.key("gate_r_squared");
        j.value(f.gate_r_squared);
        j.key("depth_slope");
        j.value(f.depth_slope);
        j.key("depth_r_squared");
        j.value(f.depth_r_squared);
        j.end_object();
    }
    j.end_array();
    j.end_object();
    return j.str() + "\n";
}

std::string resource_table_to_csv(const std::vector<ResourceRow>& rows,
                                  const std::vector<ResourceFit>& fits) {
    std::ostringstream out;
    out << "record,circuit,n,gates,depth,qubits,gate_exponent,gate_r_squared,depth_slope,"
           "depth_r_squared\n";
    for (const ResourceRow& r : rows)
        out << "count," << r.circuit << ',' << r.n << ',' << r.gates << ',' << r.depth << ','
            << r.qubits << ",,,,\n";
    for (const ResourceFit& f : fits)
        out << "fit," << f.circuit << ",,,,," << format_double(f.gate_exponent) << ','
            << format_double(f.gate_r_squared) << ',' << format_double(f.depth_slope) << ','
            << format_double(f.depth_r_squared) << '\n';
    return out.str();
}

} // namespace qspread
