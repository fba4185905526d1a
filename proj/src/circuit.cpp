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
#include <cmath>

#include "qwgan/circuit.hpp"

namespace qwgan {

bool gate_is_rotation(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ:
    case GateKind::CRX:
        return true;
    default:
        return false;
    }
}

int gate_arity(GateKind kind) {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::RZZ:
    case GateKind::CRX:
        return 2;
    default:
        return 1;
    }
}

const char *gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Z:
        return "Z";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::RZZ:
        return "RZZ";
    default:
        return "CRX";
    }
}

void Circuit::validate() const {
    detail::require(n_qubits >= 1, "circuit needs at least one qubit");
    detail::require(n_params >= 0, "negative parameter count");
    for (const auto &g : gates) {
        const int arity = gate_arity(g.kind);
        for (int i = 0; i < arity; ++i) {
            detail::require(g.qubits[i] >= 1 && g.qubits[i] <= n_qubits,
                            std::string(gate_name(g.kind)) +
                                ": qubit index out of range");
        }
        if (arity == 2) {
            detail::require(g.qubits[0] != g.qubits[1],
                            std::string(gate_name(g.kind)) +
                                ": qubit indices must be distinct");
        }
        if (gate_is_rotation(g.kind)) {
            detail::require(g.param_index.has_value() != g.fixed_angle.has_value(),
                            "rotation gate needs exactly one of param_index or "
                            "fixed_angle");
            if (g.param_index) {
                detail::require(*g.param_index >= 0 && *g.param_index < n_params,
                                "param_index out of range");
            }
        } else {
            detail::require(!g.param_index && !g.fixed_angle,
                            "non-rotation gate cannot carry an angle");
        }
    }
}

namespace detail {

double resolve_angle(const GateOp &gate, std::span<const double> params) {
    if (!gate_is_rotation(gate.kind)) {
        return 0.0;
    }
    if (gate.fixed_angle) {
        return *gate.fixed_angle;
    }
    require(gate.param_index.has_value(), "rotation gate has unresolved angle");
    require(*gate.param_index >= 0 &&
                static_cast<std::size_t>(*gate.param_index) < params.size(),
            "param_index not covered by the parameter vector");
    return params[static_cast<std::size_t>(*gate.param_index)];
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void apply(StateVector &state, const GateOp &gate, double angle, bool dagger) {
    const auto &k = simd::active();
    const std::size_t dim = state.dim();
    cplx *amps = state.data();
    const double t = dagger ? -angle : angle;
    switch (gate.kind) {
    case GateKind::H: {
        const cplx m[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        k.apply_matrix2(amps, dim, state.qubit_mask(gate.qubits[0]), m);
        return;
    }
    case GateKind::X: {
        const cplx m[4] = {0.0, 1.0, 1.0, 0.0};
        k.apply_matrix2(amps, dim, state.qubit_mask(gate.qubits[0]), m);
        return;
    }
    case GateKind::Z:
        k.apply_parity_phase(amps, dim, state.qubit_mask(gate.qubits[0]), 1.0,
                             -1.0);
        return;
    case GateKind::CNOT: {
        const cplx m[4] = {0.0, 1.0, 1.0, 0.0};
        k.apply_controlled_matrix2(amps, dim, state.qubit_mask(gate.qubits[0]),
                                   state.qubit_mask(gate.qubits[1]), m);
        return;
    }
    case GateKind::RX: {
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        const cplx m[4] = {c, {0.0, -s}, {0.0, -s}, c};
        k.apply_matrix2(amps, dim, state.qubit_mask(gate.qubits[0]), m);
        return;
    }
    case GateKind::RY: {
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        const cplx m[4] = {c, -s, s, c};
        k.apply_matrix2(amps, dim, state.qubit_mask(gate.qubits[0]), m);
        return;
    }
    case GateKind::RZ: {
        const cplx e = std::polar(1.0, -t / 2);
        k.apply_parity_phase(amps, dim, state.qubit_mask(gate.qubits[0]), e,
                             std::conj(e));
        return;
    }
    case GateKind::RZZ: {
        const cplx e = std::polar(1.0, -t / 2);
        const std::size_t zz = state.qubit_mask(gate.qubits[0]) |
                               state.qubit_mask(gate.qubits[1]);
        k.apply_parity_phase(amps, dim, zz, e, std::conj(e));
        return;
    }
    case GateKind::CRX: {
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        const cplx m[4] = {c, {0.0, -s}, {0.0, -s}, c};
        k.apply_controlled_matrix2(amps, dim, state.qubit_mask(gate.qubits[0]),
                                   state.qubit_mask(gate.qubits[1]), m);
        return;
    }
    }
}

} // namespace

void apply_gate_in_place(StateVector &state, const GateOp &gate, double angle) {
    apply(state, gate, angle, false);
}

void apply_gate_dagger_in_place(StateVector &state, const GateOp &gate,
                                double angle) {
    apply(state, gate, angle, true);
}

} // namespace detail

StateVector apply_gate(const StateVector &state, const GateOp &gate,
                       double angle) {
    const int arity = gate_arity(gate.kind);
    for (int i = 0; i < arity; ++i) {
        detail::require(gate.qubits[i] >= 1 && gate.qubits[i] <= state.n_qubits(),
                        "qubit index out of range");
    }
    if (arity == 2) {
        detail::require(gate.qubits[0] != gate.qubits[1],
                        "qubit indices must be distinct");
    }
    StateVector out = state;
    detail::apply_gate_in_place(out, gate, angle);
    return out;
}

StateVector run_circuit(const Circuit &circuit, std::span<const double> params,
                        const StateVector &initial) {
    circuit.validate();
    detail::require(initial.n_qubits() == circuit.n_qubits,
                    "initial state width does not match circuit");
    detail::require(params.size() == static_cast<std::size_t>(circuit.n_params),
                    "parameter vector length does not match circuit.n_params");
    StateVector state = initial;
    for (const auto &g : circuit.gates) {
        detail::apply_gate_in_place(state, g, detail::resolve_angle(g, params));
    }
    return state;
}

StateVector run_circuit(const Circuit &circuit, std::span<const double> params) {
    return run_circuit(circuit, params, StateVector(circuit.n_qubits));
}

} // namespace qwgan
