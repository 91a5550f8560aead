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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "probespec/oracle.hpp"

using namespace probespec;
using namespace probespec::test;

TEST_CASE("brute_energies on closed-form models") {
    SUBCASE("three-spin chain") {
        const std::vector<Level> levels = brute_energies(spin_chain());
        REQUIRE(levels.size() == 4);
        CHECK(levels[0].energy == doctest::Approx(-3.0));
        CHECK(levels[0].multiplicity == 1);
        CHECK(levels[1].energy == doctest::Approx(-1.0));
        CHECK(levels[1].multiplicity == 4);
        CHECK(levels[2].energy == doctest::Approx(1.0));
        CHECK(levels[2].multiplicity == 2);
        CHECK(levels[3].energy == doctest::Approx(5.0));
        CHECK(levels[3].multiplicity == 1);
    }
    SUBCASE("the shift is not applied") {
        const std::vector<Level> levels = brute_energies(spin_in_field(7.5));
        REQUIRE(levels.size() == 2);
        CHECK(levels[0].energy == doctest::Approx(-1.0));
        CHECK(levels[1].energy == doctest::Approx(1.0));
    }
    SUBCASE("H = Z_1 on two qubits: two levels, multiplicity 2") {
        const SpinModel m{2, {z_term(1.0, {1})}, 0.0};
        const std::vector<Level> levels = brute_energies(m);
        REQUIRE(levels.size() == 2);
        CHECK(levels[0].multiplicity == 2);
        CHECK(levels[1].multiplicity == 2);
    }
    SUBCASE("non-diagonal X model via the eigensolver") {
        SpinModel m = spin_in_field(0.0);
        m.terms[0].string.axes[0] = Axis::X;
        const std::vector<Level> levels = brute_energies(m);
        REQUIRE(levels.size() == 2);
        CHECK(levels[0].energy == doctest::Approx(-1.0));
        CHECK(levels[1].energy == doctest::Approx(1.0));
    }
}

TEST_CASE("enumeration and eigensolver agree on random diagonal models") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        SpinModel m = random_diagonal_model(rng, 5, 8);
        const std::vector<Level> fast = brute_energies(m);
        // force the dense path by adding a zero-coefficient X term
        SpinModel dense = m;
        Term x;
        x.coeff = 0.0;
        x.string.axes.emplace(0, Axis::X);
        dense.terms.push_back(x);
        const std::vector<Level> slow = brute_energies(dense);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) {
            CHECK(std::abs(fast[i].energy - slow[i].energy) <= 1e-9);
            CHECK(fast[i].multiplicity == slow[i].multiplicity);
        }
    }
}

TEST_CASE("compare") {
    SUBCASE("close recovery matches both levels") {
        const ComparisonReport r =
            compare({-1.01, 0.98}, {-1.0, 1.0}, 0.05);
        REQUIRE(r.matched.size() == 2);
        CHECK(r.missed.empty());
        CHECK(r.spurious.empty());
        CHECK(r.matched[0].oracle_energy == doctest::Approx(-1.0));
        CHECK(r.matched[0].recovered_energy == doctest::Approx(-1.01));
        CHECK(r.matched[0].delta == doctest::Approx(0.01));
        CHECK(r.tolerance == 0.05);
    }
    SUBCASE("empty recovery misses everything") {
        const ComparisonReport r = compare({}, {-1.0, 1.0}, 0.05);
        CHECK(r.matched.empty());
        CHECK(r.missed == std::vector<double>{-1.0, 1.0});
        CHECK(r.spurious.empty());
    }
    SUBCASE("extra recovered level is spurious") {
        const ComparisonReport r = compare({-1.0, 1.0, 7.0}, {-1.0, 1.0}, 0.05);
        CHECK(r.matched.size() == 2);
        CHECK(r.spurious == std::vector<double>{7.0});
    }
    SUBCASE("each oracle level is used at most once") {
        // both recovered values sit near 0; only the closer one matches
        const ComparisonReport r = compare({0.01, -0.02}, {0.0}, 0.05);
        CHECK(r.matched.size() == 1);
        CHECK(r.matched[0].recovered_energy == doctest::Approx(0.01));
        CHECK(r.spurious == std::vector<double>{-0.02});
    }
    SUBCASE("exactly-at-tolerance counts as a match") {
        const ComparisonReport r = compare({1.25}, {1.0}, 0.25);
        CHECK(r.matched.size() == 1);
    }
}

TEST_CASE("comparison_to_json") {
    const ComparisonReport r = compare({-1.01, 7.0}, {-1.0, 1.0}, 0.05);
    const nlohmann::json j = comparison_to_json(r);
    CHECK(j["matched"].size() == 1);
    CHECK(j["matched"][0]["oracle"].get<double>() == doctest::Approx(-1.0));
    CHECK(j["matched"][0]["recovered"].get<double>() == doctest::Approx(-1.01));
    CHECK(j["missed"] == nlohmann::json::array({1.0}));
    CHECK(j["spurious"] == nlohmann::json::array({7.0}));
    CHECK(j["tolerance"].get<double>() == 0.05);
    CHECK(j["all_found"].get<bool>() == false);
}
