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

#include "probespec/util.hpp"

#include <cmath>
#include <cstdio>
#include <regex>

namespace probespec {

double parse_pi_expr(const std::string& text) {
    static const std::regex grammar(
        R"(^\s*([+-]?)\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)?\s*(\*?\s*pi)?\s*(?:/\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?))?\s*$)",
        std::regex::icase);
    std::smatch m;
    if (!std::regex_match(text, m, grammar) || (!m[2].matched && !m[3].matched)) {
        throw ParseError("cannot parse expression '" + text +
                         "' (expected forms like 2.5, pi/12, -8*pi)");
    }
    double v = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (m[3].matched) v *= M_PI;
    if (m[4].matched) {
        double d = std::stod(m[4].str());
        if (d == 0.0) throw ParseError("division by zero in '" + text + "'");
        v /= d;
    }
    if (m[1].str() == "-") v = -v;
    return v;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace probespec
