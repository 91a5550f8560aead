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
 * Brute-force ground truth (basis enumeration / dense eigensolve) and
 * grading of recovered energy levels.
 */

#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "probespec/model.hpp"

namespace probespec {

struct Level {
    double energy = 0.0;
    int multiplicity = 0;
};

/// Sorted distinct energies of H (the shift is not applied), values within
/// 1e-9 merged with multiplicities. Diagonal models are enumerated; general
/// models go through the dense eigensolver (n_qubits <= 12).
std::vector<Level> brute_energies(const SpinModel& model);

struct LevelMatch {
    double oracle_energy = 0.0;
    double recovered_energy = 0.0;
    double delta = 0.0;
};

struct ComparisonReport {
    std::vector<LevelMatch> matched;
    std::vector<double> missed;   // oracle levels with no recovered partner
    std::vector<double> spurious; // recovered levels matching nothing
    double tolerance = 0.0;
};

/// Greedy nearest match (ascending |delta|), each level usable once;
/// leftovers are classified missed or spurious.
ComparisonReport compare(std::vector<double> recovered,
                         std::vector<double> oracle, double tol);

nlohmann::json comparison_to_json(const ComparisonReport& report);

} // namespace probespec
