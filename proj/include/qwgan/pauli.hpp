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

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qwgan/state.hpp"
#include "qwgan/types.hpp"

namespace qwgan {

/**
 * Non-identity Pauli string on n qubits, stored sparsely as
 * (qubit index -> letter) with qubit indices 1-based and sorted.
 * The canonical label concatenates letter+index, e.g. "X1Z3".
 */
class PauliString {
  public:
    PauliString(int n_qubits, std::vector<std::pair<int, char>> factors);

    int n_qubits() const { return n_qubits_; }
    const std::vector<std::pair<int, char>> &factors() const { return factors_; }
    int weight() const { return static_cast<int>(factors_.size()); }
    std::string label() const;

    /// Amplitude-index masks; see simd/kernels.hpp for their semantics.
    std::size_t xmask() const { return xmask_; }
    std::size_t zmask() const { return zmask_; }
    unsigned y_count() const { return y_count_; }

    bool operator==(const PauliString &other) const {
        return n_qubits_ == other.n_qubits_ && factors_ == other.factors_;
    }

  private:
    int n_qubits_;
    std::vector<std::pair<int, char>> factors_;
    std::size_t xmask_ = 0;
    std::size_t zmask_ = 0;
    unsigned y_count_ = 0;
};

PauliString parse_label(const std::string &text, int n_qubits);
inline std::string format_label(const PauliString &p) { return p.label(); }

/**
 * All Pauli strings of weight 1..max_weight on n qubits, in the canonical
 * order: by weight, then support tuple, then letters (X < Y < Z). The order
 * fixes LP column numbering and every serialized expectation vector.
 */
class ObservableSet {
  public:
    ObservableSet(int n_qubits, int max_weight);

    int n_qubits() const { return n_qubits_; }
    int max_weight() const { return max_weight_; }
    std::size_t size() const { return strings_.size(); }
    const std::vector<PauliString> &strings() const { return strings_; }
    const PauliString &operator[](std::size_t i) const { return strings_[i]; }

    /// Position of a label, or -1 when absent.
    long index_of(const std::string &label) const;

  private:
    int n_qubits_;
    int max_weight_;
    std::vector<PauliString> strings_;
    std::map<std::string, std::size_t> index_;
};

inline ObservableSet enumerate_observables(int n_qubits, int max_weight) {
    return ObservableSet(n_qubits, max_weight);
}

/// Values aligned with an ObservableSet's canonical order.
struct ExpectationVector {
    int n_qubits = 0;
    int max_weight = 0;
    std::vector<double> values;

    bool compatible_with(const ObservableSet &set) const {
        return n_qubits == set.n_qubits() && max_weight == set.max_weight() &&
               values.size() == set.size();
    }
};

double pauli_expectation(const StateVector &state, const PauliString &p);
double mixture_expectation(const MixtureState &mix, const PauliString &p);

ExpectationVector expectation_vector(const StateVector &state,
                                     const ObservableSet &set);
ExpectationVector expectation_vector(const MixtureState &mix,
                                     const ObservableSet &set);

/// Hermitian observable sum_i w_i P_i.
struct WeightedPauliSum {
    std::vector<std::pair<double, PauliString>> terms;
};

/// <state| H |state> for a weighted sum.
double observable_expectation(const StateVector &state,
                              const WeightedPauliSum &obs);

/**
 * Product of Pauli factors with coefficient tracking, built one factor at a
 * time. Multiplying coincident factors follows the Pauli algebra (e.g.
 * Y*Y = I, Z*Y = -iX), so overlapping operator ranges collapse correctly.
 */
class PauliProduct {
  public:
    explicit PauliProduct(int n_qubits) : n_qubits_(n_qubits) {}

    /// Right-multiplies by a single-qubit factor.
    void multiply(int qubit, char letter);

    cplx coefficient() const { return coeff_; }
    bool is_identity() const;

    /// The residual string; invalid to call when is_identity().
    PauliString string() const;

    /// coeff * <state|P|state>, with P = I giving coeff.
    cplx expectation(const StateVector &state) const;

  private:
    int n_qubits_;
    cplx coeff_{1.0, 0.0};
    std::map<int, char> letters_;
};

} // namespace qwgan
