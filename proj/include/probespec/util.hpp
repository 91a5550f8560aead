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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace probespec {

/// Base error type for all probespec failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid model document.
struct ParseError : Error {
    using Error::Error;
};

/// splitmix64 step; used to derive independent per-sample RNG seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Parses "a*pi/b"-style expressions: an optional sign, an optional decimal
// factor, an optional "pi", an optional "/denominator". Plain decimals are
// accepted too. Throws ParseError on anything else.
double parse_pi_expr(const std::string& text);

/// Formats a double with 17 significant digits (lossless round trip).
std::string format_real(double v);

} // namespace probespec
