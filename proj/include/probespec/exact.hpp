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
 * Exact evaluation of the probe expectation <sigma_x0(t)>: a fast
 * enumeration path for Z-only models and a dense eigendecomposition path
 * for arbitrary Pauli models, including the spectral weights g_j.
 */

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "probespec/model.hpp"

namespace probespec {

using complex = std::complex<double>;

/// Full amplitude vector of an n-qubit pure state. Qubit 0 is the least
/// significant bit of the amplitude index.
struct StateVector {
    int n_qubits = 0;
    std::vector<complex> amps;

    double norm() const;
};

/// |+...+> on n qubits: all 2^n amplitudes equal 2^{-n/2}.
StateVector plus_state(int n);

/// One (omega_j, g_j) line of the expectation series
/// <sigma_x0(t)> = sum_j g_j exp(-2 i omega_j t).
struct SpectralLine {
    double omega = 0.0;
    complex g;
};
using SpectralCoefficients = std::vector<SpectralLine>;

/// Dense matrix of sum_k a_k P_k (plus shift*I when include_shift).
/// Throws Error when n_qubits exceeds max_qubits (default 12).
Eigen::MatrixXcd pauli_to_dense(const SpinModel& model,
                                bool include_shift = false,
                                int max_qubits = 12);
Eigen::MatrixXcd pauli_to_dense(const TotalModel& total, int max_qubits = 12);

/// Applies sigma_x on qubit 0 (flips bit 0 of the index).
Eigen::VectorXcd apply_sigma_x0(const Eigen::VectorXcd& v);

/// exp(-i H t) psi0 via eigendecomposition of Hermitian h.
Eigen::VectorXcd evolve(const Eigen::MatrixXcd& h, const StateVector& psi0,
                        double t);

/// A(t) = 2^{-(N+1)} sum_k cos(2 E_k t) for a Z-only total model with the
/// |+...+> initial state. The 2^{N+1} energies are enumerated once and
/// reused across times.
std::vector<double> series_diagonal(const TotalModel& total,
                                    std::span<const double> times);

/// A(t) = <psi0| sigma_x0 exp(-2 i H t) |psi0> for Hermitian h. Computed by
/// two routes (spectral series vs evolved-state expectation) that must agree
/// within 1e-10, as must the imaginary part of the result.
std::vector<double> series_dense(const Eigen::MatrixXcd& h,
                                 const StateVector& psi0,
                                 std::span<const double> times);

/// Spectral weights g_j = sum_i c_i^* <E_i|sigma_x0|E_j> c_j with
/// c = <E|psi0>. Eigenvalues within 1e-9 are merged and their g summed.
SpectralCoefficients g_coefficients(const Eigen::MatrixXcd& h,
                                    const StateVector& psi0);

/// Evaluates sum_j g_j exp(-2 i omega_j t).
complex series_from_coefficients(const SpectralCoefficients& g, double t);

} // namespace probespec
