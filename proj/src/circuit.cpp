#include "qspread/circuit.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace qspread {

namespace {

std::string bad(const std::string& what) { return "gate: " + what; }

} // namespace

const char* to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::RY: return "RY";
        case GateKind::CX: return "CX";
        case GateKind::CCX: return "CCX";
        case GateKind::MCX: return "MCX";
        case GateKind::MCZ: return "MCZ";
        case GateKind::CRY: return "CRY";
    }
    return "?";
}

Gate Gate::h(int q) { return Gate{GateKind::H, {}, q, 0.0}; }
Gate Gate::x(int q) { return Gate{GateKind::X, {}, q, 0.0}; }
Gate Gate::z(int q) { return Gate{GateKind::Z, {}, q, 0.0}; }
Gate Gate::ry(int q, double angle) { return Gate{GateKind::RY, {}, q, angle}; }
Gate Gate::cx(int control, int target) { return Gate{GateKind::CX, {control}, target, 0.0}; }
Gate Gate::ccx(int c0, int c1, int target) { return Gate{GateKind::CCX, {c0, c1}, target, 0.0}; }
Gate Gate::mcx(std::vector<int> controls, int target) {
    return Gate{GateKind::MCX, std::move(controls), target, 0.0};
}
Gate Gate::mcz(std::vector<int> controls, int target) {
    return Gate{GateKind::MCZ, std::move(controls), target, 0.0};
}
Gate Gate::cry(int control, int target, double angle) {
    return Gate{GateKind::CRY, {control}, target, angle};
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (g.is_rotation()) g.angle = -g.angle;
    return g;
}

void Gate::validate(int num_qubits) const {
    std::size_t want = 0;
    bool variadic = false;
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::RY: want = 0; break;
        case GateKind::CX:
        case GateKind::CRY: want = 1; break;
        case GateKind::CCX: want = 2; break;
        case GateKind::MCX:
        case GateKind::MCZ: variadic = true; break;
    }
    if (!variadic && controls.size() != want)
        throw StructuralError(bad(std::string(to_string(kind)) + " expects " +
                                  std::to_string(want) + " controls, got " +
                                  std::to_string(controls.size())));
    if (target < 0 || target >= num_qubits)
        throw StructuralError(bad("target " + std::to_string(target) + " out of range"));
    std::set<int> seen{target};
    for (int c : controls) {
        if (c < 0 || c >= num_qubits)
            throw StructuralError(bad("control " + std::to_string(c) + " out of range"));
        if (!seen.insert(c).second)
            throw StructuralError(bad("duplicate qubit " + std::to_string(c)));
    }
}

void RegisterLayout::validate() const {
    std::set<int> used;
    auto claim = [&](int q, const char* name) {
        if (q < 0 || q >= total_qubits)
            throw StructuralError(std::string("layout: ") + name + " outside total_qubits");
        if (!used.insert(q).second)
            throw StructuralError(std::string("layout: ") + name + " overlaps another register");
    };
    auto claim_range = [&](const QubitRange& r, const char* name) {
        for (int i = 0; i < r.width; ++i) claim(r[i], name);
    };
    claim_range(value_reg, "value_reg");
    claim_range(ramp_reg, "ramp_reg");
    if (sum_reg) claim_range(*sum_reg, "sum_reg");
    if (scratch_reg) claim_range(*scratch_reg, "scratch_reg");
    if (carry_in >= 0) claim(carry_in, "carry_in");
    if (target >= 0) claim(target, "target");
}

RegisterLayout make_comparator_layout(int n) {
    if (n < 1) throw StructuralError("layout: register width must be positive");
    RegisterLayout l;
    l.value_reg = {0, n};
    l.ramp_reg = {n, n};
    l.carry_in = 2 * n;
    l.target = 2 * n + 1;
    l.total_qubits = 2 * n + 2;
    l.validate();
    return l;
}

RegisterLayout make_weighted_adder_layout(int n, int sum_width) {
    if (n < 1 || sum_width < 1)
        throw StructuralError("layout: register width must be positive");
    RegisterLayout l;
    l.value_reg = {0, n};
    l.sum_reg = QubitRange{n, sum_width};
    l.scratch_reg = QubitRange{n + sum_width, sum_width};
    l.carry_in = n + 2 * sum_width;
    l.total_qubits = n + 2 * sum_width + 1;
    l.validate();
    return l;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw StructuralError("circuit: need at least one qubit");
    layout_.total_qubits = num_qubits;
}

void Circuit::set_layout(RegisterLayout layout) {
    if (layout.total_qubits != num_qubits_)
        throw StructuralError("circuit: layout width mismatch");
    layout.validate();
    layout_ = std::move(layout);
}

Circuit& Circuit::add(Gate g) {
    g.validate(num_qubits_);
    gates_.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::append(const Circuit& other, int offset) {
    if (offset < 0 || offset + other.num_qubits() > num_qubits_)
        throw StructuralError("circuit: appended circuit does not fit");
    for (const Gate& g : other.gates_) {
        Gate shifted = g;
        shifted.target += offset;
        for (int& c : shifted.controls) c += offset;
        add(std::move(shifted));
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(num_qubits_);
    inv.layout_ = layout_;
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
        inv.gates_.push_back(it->inverse());
    return inv;
}

} // namespace qspread
