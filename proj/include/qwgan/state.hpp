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

#include <span>
#include <utility>
#include <vector>

#include "qwgan/simd/kernels.hpp"
#include "qwgan/types.hpp"

namespace qwgan {

/**
 * Pure state of n qubits as 2^n complex amplitudes.
 *
 * Qubit 1 is the most significant bit of the amplitude index, so for n = 3
 * the basis state |q1 q2 q3> = |110> sits at index 6. The bit mask of qubit
 * q is therefore 1 << (n - q).
 *
 * Immutable from the outside; all gate operations return new values.
 */
class StateVector {
  public:
    /// |0...0>
    explicit StateVector(int n_qubits)
        : n_qubits_(n_qubits), amps_(std::size_t{1} << check_n(n_qubits)) {
        amps_[0] = 1.0;
    }

    StateVector(int n_qubits, std::vector<cplx> amplitudes)
        : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
        detail::require(amps_.size() == (std::size_t{1} << check_n(n_qubits)),
                        "amplitude count must be 2^n_qubits");
    }

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    double sq_norm() const {
        return simd::active().dot_conj(amps_.data(), amps_.data(), dim()).real();
    }

    /// Bit mask of a 1-based qubit index.
    std::size_t qubit_mask(int qubit) const {
        detail::require(qubit >= 1 && qubit <= n_qubits_,
                        "qubit index out of range");
        return std::size_t{1} << (n_qubits_ - qubit);
    }

    cplx *data() { return amps_.data(); }
    const cplx *data() const { return amps_.data(); }

  private:
    static int check_n(int n) {
        detail::require(n >= 1 && n <= 30, "n_qubits must be in [1, 30]");
        return n;
    }

    int n_qubits_;
    std::vector<cplx> amps_;
};

/// <a|b>
inline cplx inner_product(const StateVector &a, const StateVector &b) {
    detail::require(a.n_qubits() == b.n_qubits(), "qubit count mismatch");
    return simd::active().dot_conj(a.data(), b.data(), a.dim());
}

/**
 * Probabilistic mixture of pure branches; the channel-style generator output
 * sum_i p_i |psi_i><psi_i|.
 */
struct MixtureState {
    struct Branch {
        double probability;
        StateVector state;
    };
    std::vector<Branch> branches;

    int n_qubits() const {
        detail::require(!branches.empty(), "empty mixture");
        return branches.front().state.n_qubits();
    }

    void validate() const {
        detail::require(!branches.empty(), "empty mixture");
        const int n = branches.front().state.n_qubits();
        double total = 0.0;
        for (const auto &b : branches) {
            detail::require(b.probability >= 0.0, "negative branch probability");
            detail::require(b.state.n_qubits() == n,
                            "mixture branches must share n_qubits");
            total += b.probability;
        }
        detail::require(std::abs(total - 1.0) < 1e-12,
                        "branch probabilities must sum to 1");
    }
};

/// sum_i p_i |<target|psi_i>|^2
inline double fidelity_pure_vs_mixture(const StateVector &target,
                                       const MixtureState &mix) {
    detail::require(!mix.branches.empty(), "empty mixture");
    double fid = 0.0;
    for (const auto &b : mix.branches) {
        const cplx ov = inner_product(target, b.state);
        fid += b.probability * std::norm(ov);
    }
    return fid;
}

} // namespace qwgan
