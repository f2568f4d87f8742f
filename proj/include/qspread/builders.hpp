#pragma once

#include <cstdint>
#include <vector>

#include "qspread/circuit.hpp"
#include "qspread/pmf.hpp"

namespace qspread {

/// One H per ramp qubit: puts the threshold register into the uniform
/// superposition over all 2^n thresholds. Depth 1, gate count n.
Circuit build_digital_ramp(const RegisterLayout& layout);

/// Overflow-only comparator. Flips `target` exactly on the basis states where
/// A + K' >= 2^n, i.e. A > K for the descending threshold K = 2^n - 1 - K'.
///
/// Structure: a forward MAJ chain computes the ripple carry (the running
/// carry rides on the value wires), one CX copies the top carry onto the
/// target, and the mirrored MAJ chain uncomputes everything. The sum bits are
/// never formed, which is what prunes the second half of a compute/uncompute
/// adder. Gate count: exactly 6n+1. Requires carry_in = |0>.
Circuit build_pruned_comparator(const RegisterLayout& layout);

/// In-place ripple-carry adder: (A, B) -> (A, A+B mod 2^n) on
/// (value_reg, ramp_reg), with the carry-out XORed into `target`.
/// MAJ chain, carry copy, UMA chain; gate count 6n+1.
Circuit build_full_cuccaro_adder(const RegisterLayout& layout);

/// Comparator built from the adder used as a black box: run the full adder
/// (which leaves the sum in B and the carry on the target), then uncompute
/// the sum with the inverse add-without-carry-copy so B is restored. This is
/// the unpruned baseline the comparator above improves on; its middle
/// UMA/UMA-inverse pair is what pruning deletes. Gate count 12n+1.
Circuit build_adder_based_comparator(const RegisterLayout& layout);

/// Accumulates sum_reg += sum_j weights[j] * x_j over the value qubits x_j.
/// Each weight is loaded into the scratch register with CX gates controlled
/// on its input qubit, added into sum_reg with a Cuccaro mod-2^m block, and
/// unloaded again, so the scratch register is clean after every constant.
/// sum_reg must be wide enough for the full weight total. Weights of zero
/// emit no gates.
Circuit build_weighted_adder(const std::vector<std::uint64_t>& weights,
                             const RegisterLayout& layout);

/// Appends a RY(angle) on `target_qubit` selected by a full control pattern:
/// ctrl_qubits[t] must read bit (size-1-t) of `pattern`. Zero-pattern
/// controls are X-conjugated; rotations on two or more controls expand to
/// [MCX, RY(-angle/2), MCX, RY(angle/2)]. An angle of exactly 0 emits nothing.
void append_pattern_ry(Circuit& c, const std::vector<int>& ctrl_qubits, std::uint64_t pattern,
                       int target_qubit, double angle);

/// Prepares sum_i sqrt(p_i)|i> on `n` qubits (real non-negative amplitudes)
/// from |0...0> via a binary tree of multiplexed RY rotations. At tree level
/// k the rotation acts on qubit n-1-k and is selected by the k higher qubits;
/// the angle at a node with left/right subtree masses L,R is
/// 2*atan2(sqrt(R), sqrt(L)). Zero-mass branches emit nothing.
Circuit build_amplitude_encoder(const Pmf& pmf);

/// Full spreading oracle on 2n+2 qubits: amplitude encoder on the value
/// register, uniform ramp on the threshold register, pruned comparator into
/// the target. The target marginal equals sum_i p_i * i / 2^n exactly.
Circuit build_ds_oracle(const Pmf& pmf);

} // namespace qspread
