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
 * Gate-level realization of the probe protocol for Z-only total models:
 * Hadamard wall, exp(-i H_T t) as CNOT-ladder/RZ blocks, probe basis
 * rotation, and shot-sampled readout.
 *
 * Conventions (fixed, asserted in tests):
 *   RZ(theta) = exp(-i theta Z / 2), so a term a*(Z-string) at time t
 *   compiles to RZ(2*a*t).
 *   RY(theta) = exp(+i theta Y / 2); RY(pi/2) maps |+> to |0>, so measuring
 *   Z_0 after it reads off <sigma_x0> of the pre-rotation state.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "probespec/exact.hpp"
#include "probespec/model.hpp"

namespace probespec {

enum class GateKind { Hadamard, RY, RZ, Cnot };

struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;        // CNOT target
    double angle = 0.0; // radians, RY/RZ only
};

struct Circuit {
    int width = 0;
    std::vector<Gate> gates;
    int measured_qubit = 0;

    /// Debug dump, one gate per line: KIND q[,q2][,angle], angles with
    /// 17 significant digits.
    std::string dump() const;
};

/// Compiles the protocol for one evolution time t: a Hadamard on every
/// qubit, then per term (a, S) a CNOT ladder chaining the qubits of S onto
/// its highest-index qubit, RZ(2*a*t) there, the reversed ladder, and
/// finally RY(pi/2) on the probe. Terms are ordered by sorted qubit tuple
/// then coefficient. All terms commute, so there is no Trotter error.
/// Throws Error for non-diagonal models.
Circuit compile_protocol(const TotalModel& total, double t);

/// Applies the gates in order to `initial` (default |0...0>).
StateVector run_statevector(const Circuit& circuit,
                            const StateVector* initial = nullptr);

/// <Z_0> = sum_{bit0=0} |a_k|^2 - sum_{bit0=1} |a_k|^2.
double expectation_z0(const StateVector& state);

struct ShotResult {
    int shots = 0;
    int count0 = 0;
    double estimate = 0.0; // 2*count0/shots - 1
    double stderror = 0.0; // sqrt((1 - estimate^2) / shots)
};

/// Draws count0 ~ Binomial(shots, p0) with p0 the probe-qubit probability
/// of reading 0, from a deterministic generator seeded per call.
ShotResult sample_shots(const StateVector& state, int shots,
                        std::uint64_t seed);

} // namespace probespec
