#pragma once

#include <optional>
#include <vector>

#include "qspread/gate.hpp"

namespace qspread {

struct QubitRange {
    int start = 0;
    int width = 0;

    bool contains(int q) const { return q >= start && q < start + width; }
    int operator[](int i) const { return start + i; }
};

/// Register map shared by the circuit builders. value_reg holds the encoded
/// distribution, ramp_reg the uniform threshold register (doubling as the
/// second adder operand), sum_reg/scratch_reg belong to the weighted adder.
struct RegisterLayout {
    QubitRange value_reg{};
    QubitRange ramp_reg{};
    std::optional<QubitRange> sum_reg;
    std::optional<QubitRange> scratch_reg;
    int carry_in = -1;
    int target = -1;
    int total_qubits = 0;

    /// Throws StructuralError if ranges overlap or leave total_qubits.
    void validate() const;
};

/// Comparator/spreading layout on 2n+2 wires:
/// value [0,n), ramp [n,2n), carry_in 2n, target 2n+1.
RegisterLayout make_comparator_layout(int n);

/// Weighted-adder layout on n+2m+1 wires:
/// value [0,n), sum [n,n+m), scratch [n+m,n+2m), carry_in n+2m.
RegisterLayout make_weighted_adder_layout(int n, int sum_width);

/// An ordered gate list on a fixed number of qubits, with an optional
/// register layout describing what the wires mean.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    const RegisterLayout& layout() const { return layout_; }
    void set_layout(RegisterLayout layout);

    Circuit& add(Gate g);

    Circuit& h(int q) { return add(Gate::h(q)); }
    Circuit& x(int q) { return add(Gate::x(q)); }
    Circuit& z(int q) { return add(Gate::z(q)); }
    Circuit& ry(int q, double angle) { return add(Gate::ry(q, angle)); }
    Circuit& cx(int c, int t) { return add(Gate::cx(c, t)); }
    Circuit& ccx(int c0, int c1, int t) { return add(Gate::ccx(c0, c1, t)); }
    Circuit& mcx(std::vector<int> cs, int t) { return add(Gate::mcx(std::move(cs), t)); }
    Circuit& mcz(std::vector<int> cs, int t) { return add(Gate::mcz(std::move(cs), t)); }
    Circuit& cry(int c, int t, double angle) { return add(Gate::cry(c, t, angle)); }

    /// Appends another circuit's gates with all qubit indices shifted by
    /// `offset`. The other circuit must fit: offset + other.num_qubits() <= num_qubits().
    Circuit& append(const Circuit& other, int offset = 0);

    /// Reversed gate order with per-gate inverses.
    Circuit inverse() const;

private:
    int num_qubits_ = 0;
    std::vector<Gate> gates_;
    RegisterLayout layout_;
};

} // namespace qspread
