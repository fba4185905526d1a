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

#include <Eigen/Dense>

#include "qwgan/pauli.hpp"
#include "qwgan/state.hpp"
#include "qwgan/types.hpp"

namespace qwgan {

/**
 * Dense 2^n x 2^n density matrix. Exists as a metrics/oracle path and is
 * capped at n <= 8; the training stack never touches it.
 */
class DensityMatrix {
  public:
    static constexpr int kMaxQubits = 8;

    DensityMatrix(int n_qubits, Eigen::MatrixXcd entries);

    static DensityMatrix from_state(const StateVector &state);
    static DensityMatrix from_mixture(const MixtureState &mix);

    int n_qubits() const { return n_qubits_; }
    const Eigen::MatrixXcd &entries() const { return entries_; }

    double trace_real() const { return entries_.trace().real(); }

    /// Tr[rho P]
    double pauli_expectation(const PauliString &p) const;

  private:
    int n_qubits_;
    Eigen::MatrixXcd entries_;
};

/// (1/2) ||a - b||_1 via the eigenvalues of the Hermitian difference.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Dense matrix of a Pauli string (oracle-side helper).
Eigen::MatrixXcd pauli_matrix(const PauliString &p);

} // namespace qwgan
