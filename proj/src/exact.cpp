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

#include "probespec/exact.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace probespec {

namespace {

constexpr double kCrossCheckTol = 1e-10;
constexpr double kDegeneracyTol = 1e-9;

Eigen::Map<const Eigen::VectorXcd> as_vector(const StateVector& psi) {
    return {psi.amps.data(), static_cast<Eigen::Index>(psi.amps.size())};
}

struct EigenSystem {
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
};

EigenSystem decompose(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) throw Error("series_dense: matrix is not square");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw Error("series_dense: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw Error("series_dense: eigendecomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

} // namespace

double StateVector::norm() const {
    double s = 0.0;
    for (const complex& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

StateVector plus_state(int n) {
    if (n < 1) throw Error("plus_state: need at least one qubit");
    StateVector psi;
    psi.n_qubits = n;
    psi.amps.assign(size_t{1} << n, std::pow(2.0, -0.5 * n));
    return psi;
}

Eigen::MatrixXcd pauli_to_dense(const SpinModel& model, bool include_shift,
                                int max_qubits) {
    if (model.n_qubits > max_qubits)
        throw Error("pauli_to_dense: " + std::to_string(model.n_qubits) +
                    " qubits exceeds the dense cap of " +
                    std::to_string(max_qubits));
    const size_t dim = size_t{1} << model.n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    constexpr complex im{0.0, 1.0};

    for (const Term& t : model.terms) {
        size_t flip = 0, zmask = 0, ymask = 0;
        for (const auto& [q, a] : t.string.axes) {
            const size_t bit = size_t{1} << q;
            if (a == Axis::Z) zmask |= bit;
            else flip |= bit;
            if (a == Axis::Y) ymask |= bit;
        }
        // Column c maps to row c ^ flip with a phase from Z and Y factors:
        // Z contributes (-1)^bit, Y contributes i on |0> and -i on |1>.
        for (size_t c = 0; c < dim; ++c) {
            complex phase = (std::popcount(c & zmask) & 1) ? -1.0 : 1.0;
            const int y_total = std::popcount(ymask);
            const int y_ones = std::popcount(c & ymask);
            if (y_total) {
                // i^(zeros) * (-i)^(ones)
                complex yphase = 1.0;
                switch (((y_total - y_ones) - y_ones) & 3) {
                    case 0: yphase = 1.0; break;
                    case 1: yphase = im; break;
                    case 2: yphase = -1.0; break;
                    case 3: yphase = -im; break;
                }
                phase *= yphase;
            }
            m(c ^ flip, c) += t.coeff * phase;
        }
    }
    if (include_shift && model.shift != 0.0)
        m += model.shift * Eigen::MatrixXcd::Identity(dim, dim);
    return m;
}

Eigen::MatrixXcd pauli_to_dense(const TotalModel& total, int max_qubits) {
    return pauli_to_dense(total.as_spin_model(), false, max_qubits);
}

Eigen::VectorXcd apply_sigma_x0(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = v(k ^ 1);
    return out;
}

Eigen::VectorXcd evolve(const Eigen::MatrixXcd& h, const StateVector& psi0,
                        double t) {
    if (h.rows() != static_cast<Eigen::Index>(psi0.amps.size()))
        throw Error("evolve: dimension mismatch");
    auto [evals, evecs] = decompose(h);
    Eigen::VectorXcd c = evecs.adjoint() * as_vector(psi0);
    for (Eigen::Index j = 0; j < c.size(); ++j)
        c(j) *= std::polar(1.0, -evals(j) * t);
    return evecs * c;
}

std::vector<double> series_diagonal(const TotalModel& total,
                                    std::span<const double> times) {
    const SpinModel flat = total.as_spin_model();
    if (!flat.is_diagonal())
        throw Error("series_diagonal: total model has non-Z terms");
    const std::vector<double> energies = diagonal_energies(flat, false);
    const double weight = 1.0 / static_cast<double>(energies.size());

    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        double a = 0.0;
        for (double e : energies) a += std::cos(2.0 * e * t);
        out.push_back(a * weight);
    }
    return out;
}

std::vector<double> series_dense(const Eigen::MatrixXcd& h,
                                 const StateVector& psi0,
                                 std::span<const double> times) {
    if (h.rows() != static_cast<Eigen::Index>(psi0.amps.size()))
        throw Error("series_dense: dimension mismatch");
    auto [evals, evecs] = decompose(h);
    const Eigen::VectorXcd c = evecs.adjoint() * as_vector(psi0);
    const Eigen::VectorXcd d = evecs.adjoint() * apply_sigma_x0(as_vector(psi0));

    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        // Route (i): spectral series sum_j conj(d_j) c_j exp(-2 i E_j t).
        complex a1 = 0.0;
        for (Eigen::Index j = 0; j < c.size(); ++j)
            a1 += std::conj(d(j)) * c(j) * std::polar(1.0, -2.0 * evals(j) * t);

        // Route (ii): <psi(t)| sigma_x0 |psi(t)> with psi(t) = exp(-iHt) psi0.
        Eigen::VectorXcd ct = c;
        for (Eigen::Index j = 0; j < ct.size(); ++j)
            ct(j) *= std::polar(1.0, -evals(j) * t);
        const Eigen::VectorXcd psi_t = evecs * ct;
        const complex a2 = psi_t.dot(apply_sigma_x0(psi_t));

        if (std::abs(a1 - a2) > kCrossCheckTol)
            throw Error("series_dense: spectral and evolved routes disagree");
        if (std::abs(a1.imag()) > kCrossCheckTol)
            throw Error("series_dense: expectation has a non-real part");
        out.push_back(a1.real());
    }
    return out;
}

SpectralCoefficients g_coefficients(const Eigen::MatrixXcd& h,
                                    const StateVector& psi0) {
    if (h.rows() != static_cast<Eigen::Index>(psi0.amps.size()))
        throw Error("g_coefficients: dimension mismatch");
    auto [evals, evecs] = decompose(h);
    const Eigen::VectorXcd c = evecs.adjoint() * as_vector(psi0);
    const Eigen::VectorXcd d = evecs.adjoint() * apply_sigma_x0(as_vector(psi0));

    // Eigenvalues arrive sorted; merge degenerate levels as we go.
    SpectralCoefficients lines;
    for (Eigen::Index j = 0; j < c.size(); ++j) {
        const complex g = std::conj(d(j)) * c(j);
        if (!lines.empty() && evals(j) - lines.back().omega < kDegeneracyTol) {
            lines.back().g += g;
        } else {
            lines.push_back({evals(j), g});
        }
    }
    return lines;
}

complex series_from_coefficients(const SpectralCoefficients& g, double t) {
    complex a = 0.0;
    for (const SpectralLine& line : g)
        a += line.g * std::polar(1.0, -2.0 * line.omega * t);
    return a;
}

} // namespace probespec
