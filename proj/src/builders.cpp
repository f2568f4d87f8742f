#include "qspread/builders.hpp"

#include <cmath>
#include <string>

namespace qspread {

namespace {

// Wire triple for ripple stage i. The running carry enters stage 0 on the
// dedicated carry_in ancilla and afterwards rides on the value wires.
struct Stage {
    int carry; // x
    int b;     // y: operand that will receive the sum (if one is formed)
    int a;     // z: value wire holding the carry after MAJ
};

Stage stage_wires(const QubitRange& a_reg, const QubitRange& b_reg, int carry_in, int i) {
    return Stage{i == 0 ? carry_in : a_reg[i - 1], b_reg[i], a_reg[i]};
}

void emit_maj(Circuit& c, const Stage& s) {
    c.cx(s.a, s.b);
    c.cx(s.a, s.carry);
    c.ccx(s.carry, s.b, s.a);
}

void emit_maj_inverse(Circuit& c, const Stage& s) {
    c.ccx(s.carry, s.b, s.a);
    c.cx(s.a, s.carry);
    c.cx(s.a, s.b);
}

void emit_uma(Circuit& c, const Stage& s) {
    c.ccx(s.carry, s.b, s.a);
    c.cx(s.a, s.carry);
    c.cx(s.carry, s.b);
}

void require_comparator_layout(const RegisterLayout& l) {
    l.validate();
    if (l.value_reg.width < 1 || l.ramp_reg.width != l.value_reg.width)
        throw StructuralError("builder: value and ramp registers must have equal width");
    if (l.carry_in < 0 || l.target < 0)
        throw StructuralError("builder: layout needs carry_in and target wires");
}

/// In-place mod-2^m addition b += a (no carry-out): MAJ chain up, UMA chain
/// back down.
void emit_mod_add(Circuit& c, const QubitRange& a_reg, const QubitRange& b_reg, int carry_in) {
    const int m = a_reg.width;
    for (int i = 0; i < m; ++i) emit_maj(c, stage_wires(a_reg, b_reg, carry_in, i));
    for (int i = m - 1; i >= 0; --i) emit_uma(c, stage_wires(a_reg, b_reg, carry_in, i));
}

} // namespace

// Multiplexed-rotation emission: a RY on `target_qubit` selected by a control
// pattern. Multi-controlled RY is expanded with the standard conjugation
//   [MCX, RY(-angle/2), MCX, RY(angle/2)]
// which applies RY(angle) when all controls fire and cancels otherwise.
void append_pattern_ry(Circuit& c, const std::vector<int>& ctrl_qubits, std::uint64_t pattern,
                       int target_qubit, double angle) {
    if (angle == 0.0) return;
    std::vector<int> zeros;
    for (std::size_t t = 0; t < ctrl_qubits.size(); ++t)
        if (!((pattern >> (ctrl_qubits.size() - 1 - t)) & 1)) zeros.push_back(ctrl_qubits[t]);

    for (int q : zeros) c.x(q);
    if (ctrl_qubits.empty()) {
        c.ry(target_qubit, angle);
    } else if (ctrl_qubits.size() == 1) {
        c.cry(ctrl_qubits[0], target_qubit, angle);
    } else {
        c.mcx(ctrl_qubits, target_qubit);
        c.ry(target_qubit, -angle / 2.0);
        c.mcx(ctrl_qubits, target_qubit);
        c.ry(target_qubit, angle / 2.0);
    }
    for (int q : zeros) c.x(q);
}

Circuit build_digital_ramp(const RegisterLayout& layout) {
    layout.validate();
    if (layout.ramp_reg.width < 1) throw StructuralError("builder: layout has no ramp register");
    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    for (int i = 0; i < layout.ramp_reg.width; ++i) c.h(layout.ramp_reg[i]);
    return c;
}

Circuit build_pruned_comparator(const RegisterLayout& layout) {
    require_comparator_layout(layout);
    const int n = layout.value_reg.width;
    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    for (int i = 0; i < n; ++i)
        emit_maj(c, stage_wires(layout.value_reg, layout.ramp_reg, layout.carry_in, i));
    c.cx(layout.value_reg[n - 1], layout.target);
    for (int i = n - 1; i >= 0; --i)
        emit_maj_inverse(c, stage_wires(layout.value_reg, layout.ramp_reg, layout.carry_in, i));
    return c;
}

Circuit build_full_cuccaro_adder(const RegisterLayout& layout) {
    require_comparator_layout(layout);
    const int n = layout.value_reg.width;
    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    for (int i = 0; i < n; ++i)
        emit_maj(c, stage_wires(layout.value_reg, layout.ramp_reg, layout.carry_in, i));
    c.cx(layout.value_reg[n - 1], layout.target);
    for (int i = n - 1; i >= 0; --i)
        emit_uma(c, stage_wires(layout.value_reg, layout.ramp_reg, layout.carry_in, i));
    return c;
}

Circuit build_adder_based_comparator(const RegisterLayout& layout) {
    require_comparator_layout(layout);
    const int n = layout.value_reg.width;
    Circuit c = build_full_cuccaro_adder(layout);
    // Undo the addition (sans carry copy) to hand the operand register back.
    Circuit add_no_carry(layout.total_qubits);
    for (int i = 0; i < n; ++i)
        emit_maj(add_no_carry, stage_wires(layout.value_reg, layout.ramp_reg, layout.carry_in, i));
    for (int i = n - 1; i >= 0; --i)
        emit_uma(add_no_carry, stage_wires(layout.value_reg, layout.ramp_reg, layout.carry_in, i));
    c.append(add_no_carry.inverse());
    return c;
}

Circuit build_weighted_adder(const std::vector<std::uint64_t>& weights,
                             const RegisterLayout& layout) {
    layout.validate();
    if (!layout.sum_reg || !layout.scratch_reg || layout.carry_in < 0)
        throw StructuralError("builder: weighted adder needs sum, scratch and carry wires");
    if (static_cast<int>(weights.size()) != layout.value_reg.width)
        throw StructuralError("builder: one weight per value qubit required");
    const int m = layout.sum_reg->width;
    if (layout.scratch_reg->width != m)
        throw StructuralError("builder: scratch register must match sum width");

    std::uint64_t total = 0;
    for (std::uint64_t w : weights) total += w;
    if (m < 64 && total > ((std::uint64_t{1} << m) - 1))
        throw StructuralError("builder: sum register too narrow for weight total " +
                              std::to_string(total));

    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const std::uint64_t w = weights[j];
        if (w == 0) continue;
        const int xq = layout.value_reg[static_cast<int>(j)];
        for (int b = 0; b < m; ++b)
            if ((w >> b) & 1) c.cx(xq, (*layout.scratch_reg)[b]);
        emit_mod_add(c, *layout.scratch_reg, *layout.sum_reg, layout.carry_in);
        for (int b = 0; b < m; ++b)
            if ((w >> b) & 1) c.cx(xq, (*layout.scratch_reg)[b]);
    }
    return c;
}

Circuit build_amplitude_encoder(const Pmf& pmf) {
    pmf.validate();
    const int n = pmf.num_qubits();
    Circuit c(n);
    RegisterLayout l;
    l.value_reg = {0, n};
    l.total_qubits = n;
    c.set_layout(l);

    for (int level = 0; level < n; ++level) {
        const int target_qubit = n - 1 - level;
        std::vector<int> ctrl_qubits;
        for (int t = 0; t < level; ++t) ctrl_qubits.push_back(n - 1 - t);
        const std::size_t block = pmf.size() >> level;       // states per node
        for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << level); ++prefix) {
            const std::size_t begin = prefix * block;
            double left = 0.0, right = 0.0;
            for (std::size_t i = 0; i < block / 2; ++i) left += pmf.probs[begin + i];
            for (std::size_t i = block / 2; i < block; ++i) right += pmf.probs[begin + i];
            if (right == 0.0) continue; // also covers dead branches (L+R == 0)
            const double angle = 2.0 * std::atan2(std::sqrt(right), std::sqrt(left));
            append_pattern_ry(c, ctrl_qubits, prefix, target_qubit, angle);
        }
    }
    return c;
}

Circuit build_ds_oracle(const Pmf& pmf) {
    pmf.validate();
    const int n = pmf.num_qubits();
    const RegisterLayout layout = make_comparator_layout(n);
    Circuit c(layout.total_qubits);
    c.set_layout(layout);
    c.append(build_amplitude_encoder(pmf), layout.value_reg.start);
    c.append(build_digital_ramp(layout));
    c.append(build_pruned_comparator(layout));
    return c;
}

} // namespace qspread
