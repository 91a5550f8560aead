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

#include "probespec/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "probespec/exact.hpp"

namespace probespec {

namespace {

constexpr double kMergeTol = 1e-9;

std::vector<Level> merge_sorted(std::vector<double> energies) {
    std::sort(energies.begin(), energies.end());
    std::vector<Level> levels;
    for (double e : energies) {
        if (!levels.empty() && e - levels.back().energy < kMergeTol)
            ++levels.back().multiplicity;
        else
            levels.push_back({e, 1});
    }
    return levels;
}

} // namespace

std::vector<Level> brute_energies(const SpinModel& model) {
    if (model.is_diagonal())
        return merge_sorted(diagonal_energies(model, false));

    const Eigen::MatrixXcd h = pauli_to_dense(model, false);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error("brute_energies: eigendecomposition failed");
    const auto& w = solver.eigenvalues();
    return merge_sorted({w.data(), w.data() + w.size()});
}

ComparisonReport compare(std::vector<double> recovered,
                         std::vector<double> oracle, double tol) {
    if (tol <= 0.0) throw Error("compare: tolerance must be positive");

    struct Pair {
        double delta;
        size_t oi, ri;
    };
    std::vector<Pair> pairs;
    for (size_t oi = 0; oi < oracle.size(); ++oi)
        for (size_t ri = 0; ri < recovered.size(); ++ri) {
            const double d = std::abs(oracle[oi] - recovered[ri]);
            if (d <= tol) pairs.push_back({d, oi, ri});
        }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        return std::tie(a.oi, a.ri) < std::tie(b.oi, b.ri);
    });

    ComparisonReport report;
    report.tolerance = tol;
    std::vector<bool> o_used(oracle.size(), false), r_used(recovered.size(), false);
    for (const Pair& p : pairs) {
        if (o_used[p.oi] || r_used[p.ri]) continue;
        o_used[p.oi] = r_used[p.ri] = true;
        report.matched.push_back({oracle[p.oi], recovered[p.ri], p.delta});
    }
    for (size_t oi = 0; oi < oracle.size(); ++oi)
        if (!o_used[oi]) report.missed.push_back(oracle[oi]);
    for (size_t ri = 0; ri < recovered.size(); ++ri)
        if (!r_used[ri]) report.spurious.push_back(recovered[ri]);
    std::sort(report.matched.begin(), report.matched.end(),
              [](const LevelMatch& a, const LevelMatch& b) {
                  return a.oracle_energy < b.oracle_energy;
              });
    std::sort(report.missed.begin(), report.missed.end());
    std::sort(report.spurious.begin(), report.spurious.end());
    return report;
}

nlohmann::json comparison_to_json(const ComparisonReport& report) {
    nlohmann::json j;
    j["matched"] = nlohmann::json::array();
    for (const LevelMatch& m : report.matched)
        j["matched"].push_back({{"oracle", m.oracle_energy},
                                {"recovered", m.recovered_energy},
                                {"delta", m.delta}});
    j["missed"] = report.missed;
    j["spurious"] = report.spurious;
    j["tolerance"] = report.tolerance;
    j["all_found"] = report.missed.empty() && report.spurious.empty();
    return j;
}

} // namespace probespec
