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
#include <algorithm>
#include <cctype>

#include "qwgan/pauli.hpp"

namespace qwgan {

namespace {

bool valid_letter(char c) { return c == 'X' || c == 'Y' || c == 'Z'; }

} // namespace

PauliString::PauliString(int n_qubits, std::vector<std::pair<int, char>> factors)
    : n_qubits_(n_qubits), factors_(std::move(factors)) {
    detail::require(n_qubits_ >= 1, "n_qubits must be positive");
    detail::require(!factors_.empty(), "Pauli string must be non-identity");
    std::sort(factors_.begin(), factors_.end());
    int prev = 0;
    for (const auto &[q, letter] : factors_) {
        detail::require(q >= 1 && q <= n_qubits_, "factor qubit out of range");
        detail::require(q != prev, "repeated qubit index in Pauli string");
        detail::require(valid_letter(letter), "Pauli letter must be X, Y or Z");
        prev = q;
        const std::size_t bit = std::size_t{1} << (n_qubits_ - q);
        if (letter == 'X' || letter == 'Y') {
            xmask_ |= bit;
        }
        if (letter == 'Z' || letter == 'Y') {
            zmask_ |= bit;
        }
        if (letter == 'Y') {
            ++y_count_;
        }
    }
}

std::string PauliString::label() const {
    std::string out;
    for (const auto &[q, letter] : factors_) {
        out.push_back(letter);
        out += std::to_string(q);
    }
    return out;
}

PauliString parse_label(const std::string &text, int n_qubits) {
    detail::require(!text.empty(), "empty Pauli label");
    std::vector<std::pair<int, char>> factors;
    std::size_t pos = 0;
    int prev = 0;
    while (pos < text.size()) {
        const char letter = text[pos++];
        detail::require(valid_letter(letter),
                        "bad Pauli letter in label: " + text);
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        detail::require(pos > start, "missing qubit index in label: " + text);
        const int q = std::stoi(text.substr(start, pos - start));
        detail::require(q >= 1 && q <= n_qubits,
                        "qubit index out of range in label: " + text);
        detail::require(q > prev,
                        "qubit indices must be strictly ascending in label: " +
                            text);
        prev = q;
        factors.emplace_back(q, letter);
    }
    return PauliString(n_qubits, std::move(factors));
}

ObservableSet::ObservableSet(int n_qubits, int max_weight)
    : n_qubits_(n_qubits), max_weight_(max_weight) {
    detail::require(n_qubits >= 1, "n_qubits must be positive");
    detail::require(max_weight >= 1 && max_weight <= n_qubits,
                    "max_weight must be in [1, n_qubits]");
    static const char letters[3] = {'X', 'Y', 'Z'};
    std::vector<int> support;
    std::vector<std::size_t> letter_pick;
    for (int weight = 1; weight <= max_weight; ++weight) {
        // supports in ascending lexicographic order
        support.assign(static_cast<std::size_t>(weight), 0);
        for (int i = 0; i < weight; ++i) {
            support[static_cast<std::size_t>(i)] = i + 1;
        }
        while (true) {
            letter_pick.assign(static_cast<std::size_t>(weight), 0);
            while (true) {
                std::vector<std::pair<int, char>> factors;
                factors.reserve(static_cast<std::size_t>(weight));
                for (int i = 0; i < weight; ++i) {
                    factors.emplace_back(
                        support[static_cast<std::size_t>(i)],
                        letters[letter_pick[static_cast<std::size_t>(i)]]);
                }
                strings_.emplace_back(n_qubits_, std::move(factors));
                // odometer over letters
                int pos = weight - 1;
                while (pos >= 0 && letter_pick[static_cast<std::size_t>(pos)] == 2) {
                    letter_pick[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) {
                    break;
                }
                ++letter_pick[static_cast<std::size_t>(pos)];
            }
            // next combination
            int pos = weight - 1;
            while (pos >= 0 &&
                   support[static_cast<std::size_t>(pos)] == n_qubits - (weight - 1 - pos)) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++support[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < weight; ++i) {
                support[static_cast<std::size_t>(i)] =
                    support[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
    for (std::size_t i = 0; i < strings_.size(); ++i) {
        index_.emplace(strings_[i].label(), i);
    }
    detail::require(index_.size() == strings_.size(),
                    "duplicate labels in observable set");
}

long ObservableSet::index_of(const std::string &label) const {
    const auto it = index_.find(label);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

double pauli_expectation(const StateVector &state, const PauliString &p) {
    detail::require(state.n_qubits() == p.n_qubits(),
                    "state/observable qubit count mismatch");
    return simd::active().pauli_expectation(state.data(), state.dim(), p.xmask(),
                                            p.zmask(), p.y_count());
}

double mixture_expectation(const MixtureState &mix, const PauliString &p) {
    detail::require(!mix.branches.empty(), "empty mixture");
    double acc = 0.0;
    for (const auto &b : mix.branches) {
        acc += b.probability * pauli_expectation(b.state, p);
    }
    return acc;
}

ExpectationVector expectation_vector(const StateVector &state,
                                     const ObservableSet &set) {
    detail::require(state.n_qubits() == set.n_qubits(),
                    "state/set qubit count mismatch");
    ExpectationVector out{set.n_qubits(), set.max_weight(), {}};
    out.values.reserve(set.size());
    for (const auto &p : set.strings()) {
        out.values.push_back(pauli_expectation(state, p));
    }
    return out;
}

ExpectationVector expectation_vector(const MixtureState &mix,
                                     const ObservableSet &set) {
    detail::require(!mix.branches.empty(), "empty mixture");
    detail::require(mix.n_qubits() == set.n_qubits(),
                    "mixture/set qubit count mismatch");
    ExpectationVector out{set.n_qubits(), set.max_weight(), {}};
    out.values.assign(set.size(), 0.0);
    for (const auto &b : mix.branches) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            out.values[i] += b.probability * pauli_expectation(b.state, set[i]);
        }
    }
    return out;
}

double observable_expectation(const StateVector &state,
                              const WeightedPauliSum &obs) {
    double acc = 0.0;
    for (const auto &[w, p] : obs.terms) {
        acc += w * pauli_expectation(state, p);
    }
    return acc;
}

void PauliProduct::multiply(int qubit, char letter) {
    detail::require(qubit >= 1 && qubit <= n_qubits_,
                    "product factor qubit out of range");
    detail::require(valid_letter(letter), "Pauli letter must be X, Y or Z");
    const auto it = letters_.find(qubit);
    if (it == letters_.end()) {
        letters_.emplace(qubit, letter);
        return;
    }
    const char a = it->second;
    const char b = letter;
    if (a == b) {
        letters_.erase(it);
        return;
    }
    // products AB of distinct letters; phase table for XY=iZ and cyclic
    static const cplx plus_i{0.0, 1.0};
    static const cplx minus_i{0.0, -1.0};
    char result = 'X' + 'Y' + 'Z' - a - b;
    const bool cyclic = (a == 'X' && b == 'Y') || (a == 'Y' && b == 'Z') ||
                        (a == 'Z' && b == 'X');
    coeff_ *= cyclic ? plus_i : minus_i;
    it->second = result;
}

bool PauliProduct::is_identity() const { return letters_.empty(); }

PauliString PauliProduct::string() const {
    detail::require(!letters_.empty(), "identity product has no Pauli string");
    std::vector<std::pair<int, char>> factors(letters_.begin(), letters_.end());
    return PauliString(n_qubits_, std::move(factors));
}

cplx PauliProduct::expectation(const StateVector &state) const {
    if (is_identity()) {
        return coeff_;
    }
    return coeff_ * pauli_expectation(state, string());
}

} // namespace qwgan
