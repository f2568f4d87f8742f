#pragma once

#include <string>
#include <vector>

#include "qspread/errors.hpp"

namespace qspread {

/// Closed gate set. Keeping the list small and classical-friendly is what
/// makes the per-kind resource reports well defined.
enum class GateKind { H, X, Z, RY, CX, CCX, MCX, MCZ, CRY };

const char* to_string(GateKind kind);

/// One gate application: kind, ordered control list, target qubit, and a
/// rotation angle for RY/CRY. Angle convention:
///   RY(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>
/// i.e. the gate angle is twice the amplitude angle.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> controls;
    int target = 0;
    double angle = 0.0;

    static Gate h(int q);
    static Gate x(int q);
    static Gate z(int q);
    static Gate ry(int q, double angle);
    static Gate cx(int control, int target);
    static Gate ccx(int c0, int c1, int target);
    static Gate mcx(std::vector<int> controls, int target);
    static Gate mcz(std::vector<int> controls, int target);
    static Gate cry(int control, int target, double angle);

    bool is_rotation() const { return kind == GateKind::RY || kind == GateKind::CRY; }

    /// Inverse gate: negated angle for rotations, identity otherwise
    /// (every non-rotation kind in the set is an involution).
    Gate inverse() const;

    /// Throws StructuralError unless control arity matches the kind, all
    /// qubits are distinct, and every index is in [0, num_qubits).
    void validate(int num_qubits) const;
};

} // namespace qspread
