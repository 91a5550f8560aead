// Copyright 2026 The probespec developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <vector>

#include "probespec/model.hpp"

namespace probespec::test {

inline Term z_term(double coeff, std::initializer_list<int> qubits) {
    Term t;
    t.coeff = coeff;
    for (int q : qubits) t.string.axes.emplace(q, Axis::Z);
    return t;
}

/// H = Z_0 on one inner qubit; a single spin in a magnetic field.
inline SpinModel spin_in_field(double shift = 2.0) {
    return SpinModel{1, {z_term(1.0, {0})}, shift};
}

/// Three-spin chain J(Z0Z1 + Z1Z2 + Z0 + Z1 + Z2), inner indexing.
inline SpinModel spin_chain(double j = 1.0, double shift = 4.0) {
    return SpinModel{3,
                     {z_term(j, {0, 1}), z_term(j, {1, 2}), z_term(j, {0}),
                      z_term(j, {1}), z_term(j, {2})},
                     shift};
}

/// Random Z-only model: up to max_terms strings over n qubits, coefficients
/// uniform in [-2, 2].
inline SpinModel random_diagonal_model(std::mt19937_64& rng, int n_qubits,
                                       int max_terms, double shift = 0.0) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> n_terms(1, max_terms);
    std::uniform_int_distribution<int> qubit(0, n_qubits - 1);
    std::uniform_int_distribution<int> weight(1, n_qubits);

    SpinModel model;
    model.n_qubits = n_qubits;
    model.shift = shift;
    const int k = n_terms(rng);
    for (int i = 0; i < k; ++i) {
        Term t;
        t.coeff = coeff(rng);
        const int w = weight(rng);
        for (int j = 0; j < w; ++j) t.string.axes.emplace(qubit(rng), Axis::Z);
        model.terms.push_back(std::move(t));
    }
    return model;
}

/// Random model with arbitrary axes.
inline SpinModel random_pauli_model(std::mt19937_64& rng, int n_qubits,
                                    int max_terms, double shift = 0.0) {
    SpinModel model = random_diagonal_model(rng, n_qubits, max_terms, shift);
    std::uniform_int_distribution<int> axis(0, 2);
    for (Term& t : model.terms)
        for (auto& [q, a] : t.string.axes) {
            const int pick = axis(rng);
            a = pick == 0 ? Axis::X : (pick == 1 ? Axis::Y : Axis::Z);
        }
    return model;
}

} // namespace probespec::test
