// Copyright 2026 The qwgan developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwgan/state.hpp"
#include "qwgan/types.hpp"

namespace qwgan {

enum class GateKind { H, X, Z, CNOT, RX, RY, RZ, RZZ, CRX };

bool gate_is_rotation(GateKind kind);
int gate_arity(GateKind kind);
const char *gate_name(GateKind kind);

/**
 * One gate instance. Rotation gates carry either a parameter slot into the
 * circuit's parameter vector or a fixed angle, never both.
 * Qubit indices are 1-based; qubits[1] is ignored for single-qubit gates.
 * For CNOT and CRX, qubits[0] is the control and qubits[1] the target.
 */
struct GateOp {
    GateKind kind;
    std::array<int, 2> qubits{0, 0};
    std::optional<int> param_index;
    std::optional<double> fixed_angle;

    static GateOp h(int q) { return {GateKind::H, {q, 0}, {}, {}}; }
    static GateOp x(int q) { return {GateKind::X, {q, 0}, {}, {}}; }
    static GateOp z(int q) { return {GateKind::Z, {q, 0}, {}, {}}; }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, {control, target}, {}, {}};
    }
    static GateOp rx(int q, int param) { return {GateKind::RX, {q, 0}, param, {}}; }
    static GateOp ry(int q, int param) { return {GateKind::RY, {q, 0}, param, {}}; }
    static GateOp rz(int q, int param) { return {GateKind::RZ, {q, 0}, param, {}}; }
    static GateOp rzz(int a, int b, int param) {
        return {GateKind::RZZ, {a, b}, param, {}};
    }
    static GateOp crx(int control, int target, int param) {
        return {GateKind::CRX, {control, target}, param, {}};
    }
    static GateOp rx_fixed(int q, double angle) {
        return {GateKind::RX, {q, 0}, {}, angle};
    }
    static GateOp ry_fixed(int q, double angle) {
        return {GateKind::RY, {q, 0}, {}, angle};
    }
    static GateOp rz_fixed(int q, double angle) {
        return {GateKind::RZ, {q, 0}, {}, angle};
    }
};

/// Ordered gate sequence over a fixed register with n_params free angles.
struct Circuit {
    int n_qubits = 0;
    std::vector<GateOp> gates;
    int n_params = 0;

    void validate() const;
};

/**
 * Applies a single gate; `angle` is the resolved rotation angle and is
 * ignored for non-rotation gates. Rotations follow exp(-i theta P / 2),
 * which reproduces the RY matrix [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
 */
StateVector apply_gate(const StateVector &state, const GateOp &gate,
                       double angle = 0.0);

/// All gates in order, starting from `initial`; params resolves free angles.
StateVector run_circuit(const Circuit &circuit, std::span<const double> params,
                        const StateVector &initial);

/// run_circuit from |0...0>.
StateVector run_circuit(const Circuit &circuit, std::span<const double> params);

namespace detail {

/// In-place application; the building block behind the pure wrappers.
void apply_gate_in_place(StateVector &state, const GateOp &gate, double angle);

/// In-place inverse (dagger) application, used by the adjoint sweep.
void apply_gate_dagger_in_place(StateVector &state, const GateOp &gate,
                                double angle);

double resolve_angle(const GateOp &gate, std::span<const double> params);

} // namespace detail

} // namespace qwgan
