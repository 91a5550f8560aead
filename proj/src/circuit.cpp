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

#include "probespec/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace probespec {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

void check_qubit(int q, int width, const char* what) {
    if (q < 0 || q >= width)
        throw Error(std::string(what) + ": qubit " + std::to_string(q) +
                    " out of range for width " + std::to_string(width));
}

void apply_hadamard(std::vector<complex>& amps, int q) {
    const size_t bit = size_t{1} << q;
    for (size_t k = 0; k < amps.size(); ++k) {
        if (k & bit) continue;
        const complex a0 = amps[k];
        const complex a1 = amps[k | bit];
        amps[k] = kSqrtHalf * (a0 + a1);
        amps[k | bit] = kSqrtHalf * (a0 - a1);
    }
}

// RY(theta) = exp(+i theta Y / 2) = [[cos, sin], [-sin, cos]](theta/2).
void apply_ry(std::vector<complex>& amps, int q, double theta) {
    const size_t bit = size_t{1} << q;
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    for (size_t k = 0; k < amps.size(); ++k) {
        if (k & bit) continue;
        const complex a0 = amps[k];
        const complex a1 = amps[k | bit];
        amps[k] = c * a0 + s * a1;
        amps[k | bit] = -s * a0 + c * a1;
    }
}

// RZ(theta) = exp(-i theta Z / 2).
void apply_rz(std::vector<complex>& amps, int q, double theta) {
    const size_t bit = size_t{1} << q;
    const complex p0 = std::polar(1.0, -theta / 2.0);
    const complex p1 = std::polar(1.0, theta / 2.0);
    for (size_t k = 0; k < amps.size(); ++k)
        amps[k] *= (k & bit) ? p1 : p0;
}

void apply_cnot(std::vector<complex>& amps, int control, int target) {
    const size_t cbit = size_t{1} << control;
    const size_t tbit = size_t{1} << target;
    for (size_t k = 0; k < amps.size(); ++k)
        if ((k & cbit) && !(k & tbit)) std::swap(amps[k], amps[k | tbit]);
}

} // namespace

std::string Circuit::dump() const {
    std::ostringstream out;
    for (const Gate& g : gates) {
        switch (g.kind) {
            case GateKind::Hadamard:
                out << "H " << g.q0 << '\n';
                break;
            case GateKind::RY:
                out << "RY " << g.q0 << ',' << format_real(g.angle) << '\n';
                break;
            case GateKind::RZ:
                out << "RZ " << g.q0 << ',' << format_real(g.angle) << '\n';
                break;
            case GateKind::Cnot:
                out << "CNOT " << g.q0 << ',' << g.q1 << '\n';
                break;
        }
    }
    return out.str();
}

Circuit compile_protocol(const TotalModel& total, double t) {
    const SpinModel flat = total.as_spin_model();
    if (!flat.is_diagonal())
        throw Error("compile_protocol: circuit compilation supports Z-only "
                    "models (X/Y terms require the dense engine)");

    // Canonical order: sorted qubit tuple, then coefficient.
    std::vector<Term> terms = flat.terms;
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) {
                         const auto qa = a.string.qubits();
                         const auto qb = b.string.qubits();
                         if (qa != qb) return qa < qb;
                         return a.coeff < b.coeff;
                     });

    Circuit circuit;
    circuit.width = total.n_qubits();
    circuit.measured_qubit = 0;
    for (int q = 0; q < circuit.width; ++q)
        circuit.gates.push_back({GateKind::Hadamard, q});

    for (const Term& term : terms) {
        const std::vector<int> qs = term.string.qubits();
        if (qs.empty()) continue; // identity term: global phase only
        for (size_t i = 0; i + 1 < qs.size(); ++i)
            circuit.gates.push_back({GateKind::Cnot, qs[i], qs[i + 1]});
        circuit.gates.push_back(
            {GateKind::RZ, qs.back(), -1, 2.0 * term.coeff * t});
        for (size_t i = qs.size() - 1; i-- > 0;)
            circuit.gates.push_back({GateKind::Cnot, qs[i], qs[i + 1]});
    }

    circuit.gates.push_back({GateKind::RY, 0, -1, M_PI / 2.0});
    return circuit;
}

StateVector run_statevector(const Circuit& circuit,
                            const StateVector* initial) {
    StateVector psi;
    if (initial) {
        if (initial->n_qubits != circuit.width)
            throw Error("run_statevector: state width " +
                        std::to_string(initial->n_qubits) +
                        " does not match circuit width " +
                        std::to_string(circuit.width));
        psi = *initial;
    } else {
        psi.n_qubits = circuit.width;
        psi.amps.assign(size_t{1} << circuit.width, 0.0);
        psi.amps[0] = 1.0;
    }

    for (const Gate& g : circuit.gates) {
        check_qubit(g.q0, circuit.width, "run_statevector");
        switch (g.kind) {
            case GateKind::Hadamard:
                apply_hadamard(psi.amps, g.q0);
                break;
            case GateKind::RY:
                apply_ry(psi.amps, g.q0, g.angle);
                break;
            case GateKind::RZ:
                apply_rz(psi.amps, g.q0, g.angle);
                break;
            case GateKind::Cnot:
                check_qubit(g.q1, circuit.width, "run_statevector");
                if (g.q0 == g.q1)
                    throw Error("run_statevector: CNOT control equals target");
                apply_cnot(psi.amps, g.q0, g.q1);
                break;
        }
    }
    return psi;
}

double expectation_z0(const StateVector& state) {
    double z = 0.0;
    for (size_t k = 0; k < state.amps.size(); ++k) {
        const double p = std::norm(state.amps[k]);
        z += (k & 1) ? -p : p;
    }
    return z;
}

ShotResult sample_shots(const StateVector& state, int shots,
                        std::uint64_t seed) {
    if (shots < 1) throw Error("sample_shots: shots must be >= 1");
    double p0 = 0.0;
    for (size_t k = 0; k < state.amps.size(); k += 2)
        p0 += std::norm(state.amps[k]);
    p0 = std::clamp(p0, 0.0, 1.0);

    // mt19937_64 output is fully specified by the standard, and the uniform
    // draw below is our own, so results are reproducible across platforms.
    std::mt19937_64 rng(seed);
    int count0 = 0;
    for (int s = 0; s < shots; ++s) {
        const double u = (rng() >> 11) * 0x1.0p-53;
        if (u < p0) ++count0;
    }

    ShotResult r;
    r.shots = shots;
    r.count0 = count0;
    r.estimate = 2.0 * count0 / shots - 1.0;
    r.stderror = std::sqrt(std::max(0.0, 1.0 - r.estimate * r.estimate) /
                           shots);
    return r;
}

} // namespace probespec
