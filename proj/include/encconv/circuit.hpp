// Copyright 2026 The encconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Gate set, circuit container and the circuit-level passes (composition,
 * inversion, greedy-layer cost, decomposition into one- and two-qubit gates).
 *
 * Qubits are numbered left to right as they appear in a ket string. For a
 * register of n qubits, qubit q carries significance 2^(n-1-q) in the basis
 * index, so qubit 0 is the most significant bit.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace encconv {

enum class GateKind {
    X,
    H,
    RY,
    Phase,
    CNOT,
    CPhase,
    CRY,
    CCRY,
    Toffoli,
    MCX,
};

/// Name used in diagnostics ("cx", "ccry", ...).
const char* gate_name(GateKind kind);

/**
 * One primitive operation: a single-qubit base operation (X, H, RY or Phase)
 * on `target`, applied only when every control qubit is |1>.
 *
 * Construct through the named factories; they enforce operand arity, index
 * distinctness and finite angles.
 */
class Gate {
public:
    static Gate x(int q);
    static Gate h(int q);
    static Gate ry(double theta, int q);
    static Gate phase(double lambda, int q);
    static Gate cnot(int control, int target);
    static Gate cphase(double lambda, int control, int target);
    static Gate cry(double theta, int control, int target);
    static Gate ccry(double theta, int c0, int c1, int target);
    static Gate toffoli(int c0, int c1, int target);
    static Gate mcx(std::vector<int> controls, int target);

    GateKind kind() const { return kind_; }
    std::span<const int> controls() const { return controls_; }
    int target() const { return target_; }
    double angle() const { return angle_; }

    /// Controls followed by the target.
    std::vector<int> qubits() const;
    int max_qubit() const;
    bool is_single_qubit() const { return controls_.empty(); }

    /// The base operation applied to the target (X, H, RY or Phase).
    GateKind base() const;

    Gate inverse() const;

    /// Gate with every qubit index q replaced by map[q].
    Gate remapped(std::span<const int> map) const;

    bool operator==(const Gate&) const = default;

private:
    Gate(GateKind kind, std::vector<int> controls, int target, double angle);

    GateKind kind_;
    std::vector<int> controls_;
    int target_;
    double angle_;
};

/**
 * Ordered gate list on a fixed register. Builders fill a circuit through
 * add()/append(); a finished circuit is treated as an immutable value.
 */
class Circuit {
public:
    explicit Circuit(int num_qubits, std::string label = {});

    int num_qubits() const { return num_qubits_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    auto begin() const { return gates_.begin(); }
    auto end() const { return gates_.end(); }

    Circuit& add(Gate gate);

    /// Appends `other`, which must be on the same register width.
    Circuit& append(const Circuit& other);

    /// Appends `sub` with its qubit q placed on qubit map[q] of this circuit.
    Circuit& append_mapped(const Circuit& sub, std::span<const int> map);

    /// Gate-for-gate equality; labels are ignored.
    bool operator==(const Circuit& other) const;

private:
    int num_qubits_;
    std::string label_;
    std::vector<Gate> gates_;
};

Circuit compose(const Circuit& a, const Circuit& b);
Circuit inverse(const Circuit& c);

/// `c` widened to `width` qubits, qubit q placed on map[q].
Circuit embed(const Circuit& c, int width, std::span<const int> map);

/// Contiguous index map {first, first+1, ..., first+count-1}.
std::vector<int> qubit_range(int first, int count);

enum class Granularity { Logical, TwoQubitBasis };

const char* granularity_name(Granularity g);

struct CostReport {
    long depth = 0;
    long size = 0;
    int ancilla = 0;
    Granularity granularity = Granularity::Logical;
};

/// Layer count when each gate goes to the earliest layer in which all of its
/// qubits are free.
long greedy_depth(const Circuit& c);

/// Depth and size at the requested granularity. Ancilla count is a property
/// of the construction, so the caller passes it through.
CostReport cost(const Circuit& c, Granularity granularity, int ancilla = 0);

/**
 * Rewrites every gate into X/H/RY/Phase and CNOT.
 *
 *  - Toffoli: the standard 6-CNOT, 9 single-qubit gate circuit.
 *  - CPhase, CRY: two CNOTs.
 *  - CCRY: controlled-V with V = RY(theta/2), then CRY lowered.
 *  - MCX(k): H . MCPhase(pi) . H, with MCPhase peeled one control at a time;
 *    the inner MCX gates borrow an idle operand of the gate as a dirty qubit
 *    and are lowered to a linear number of Toffolis. No extra qubits.
 *
 * The result equals the input exactly (no global phase).
 */
Circuit decompose_to_basis(const Circuit& c);

/// True when every gate is single-qubit or CNOT.
bool is_basis_circuit(const Circuit& c);

}  // namespace encconv
