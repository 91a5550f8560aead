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

/**
 * @file
 * Weighted Pauli-string Hamiltonians and the probe-extended total model
 * H_T = Z_0 (H + C).
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "probespec/util.hpp"

namespace probespec {

enum class Axis : char { X = 'X', Y = 'Y', Z = 'Z' };

/// Tensor product of single-qubit Paulis; qubits absent from the map carry
/// identity. An empty map is the identity operator.
struct PauliString {
    std::map<int, Axis> axes;

    bool is_diagonal() const;
    bool is_identity() const { return axes.empty(); }
    std::vector<int> qubits() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

struct Term {
    double coeff = 0.0;
    PauliString string;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A spin Hamiltonian H = sum_k a_k P_k plus an energy shift C >= 0.
/// hbar = 1 throughout; coefficients are angular frequencies.
/// Immutable by convention after construction; safe to share across threads.
struct SpinModel {
    int n_qubits = 1;
    std::vector<Term> terms;
    double shift = 0.0;

    /// True iff every term uses only Z axes.
    bool is_diagonal() const;

    friend bool operator==(const SpinModel&, const SpinModel&) = default;
};

/// The probe-extended Hamiltonian H_T = Z_0 (H + C) on N+1 qubits.
/// Qubit 0 is the probe; inner qubit i becomes total qubit i+1.
struct TotalModel {
    SpinModel inner;
    std::vector<Term> total_terms;

    int n_qubits() const { return inner.n_qubits + 1; }

    /// View of the total Hamiltonian as a plain (N+1)-qubit model, shift 0.
    SpinModel as_spin_model() const;
};

/// Parses a JSON model document: {"qubits": int, "shift": real,
/// "terms": [{"coeff": real, "ops": [{"qubit": int, "axis": "X"|"Y"|"Z"}]}]}.
/// Throws ParseError with the offending field on invalid input.
SpinModel parse_model(const std::string& document);

/// Inverse of parse_model; reals printed with 17 significant digits.
std::string serialize_model(const SpinModel& model);

/// Builds H_T: each inner term (a, P) becomes (a, Z_0 x P) with inner qubit
/// indices shifted up by one, plus one term (C, Z_0) when C != 0.
TotalModel lift_total(const SpinModel& model);

/// Energies of a Z-only model over all 2^N computational basis states.
/// Entry k uses s_i(k) = +1 when bit i of k is 0, -1 when it is 1
/// (qubit 0 is bit 0). Throws Error for non-diagonal models.
std::vector<double> diagonal_energies(const SpinModel& model,
                                      bool include_shift);

/// sum |a_k| + C, an upper bound on max |eigenvalue of H_T|.
double spectral_bound(const SpinModel& model);

/// Suggested shift making H + C positive: spectral_bound of the unshifted
/// model plus margin. Advisory only; a user-provided C always wins.
double suggest_shift(const SpinModel& model, double margin = 1.0);

} // namespace probespec
