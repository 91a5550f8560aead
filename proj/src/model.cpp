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

#include "probespec/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace probespec {

using nlohmann::json;

bool PauliString::is_diagonal() const {
    return std::all_of(axes.begin(), axes.end(),
                       [](const auto& qa) { return qa.second == Axis::Z; });
}

std::vector<int> PauliString::qubits() const {
    std::vector<int> qs;
    qs.reserve(axes.size());
    for (const auto& [q, a] : axes) qs.push_back(q);
    return qs;
}

bool SpinModel::is_diagonal() const {
    return std::all_of(terms.begin(), terms.end(),
                       [](const Term& t) { return t.string.is_diagonal(); });
}

SpinModel TotalModel::as_spin_model() const {
    return SpinModel{inner.n_qubits + 1, total_terms, 0.0};
}

namespace {

Axis axis_from_string(const std::string& s, size_t term_idx, size_t op_idx) {
    if (s == "X") return Axis::X;
    if (s == "Y") return Axis::Y;
    if (s == "Z") return Axis::Z;
    throw ParseError("terms[" + std::to_string(term_idx) + "].ops[" +
                     std::to_string(op_idx) + "].axis: expected X, Y or Z, got '" +
                     s + "'");
}

void validate(const SpinModel& model) {
    if (model.n_qubits < 1)
        throw ParseError("qubits: must be a positive integer");
    if (!(model.shift >= 0.0) || !std::isfinite(model.shift))
        throw ParseError("shift: must be a finite real >= 0");
    for (size_t i = 0; i < model.terms.size(); ++i) {
        const Term& t = model.terms[i];
        if (!std::isfinite(t.coeff))
            throw ParseError("terms[" + std::to_string(i) + "].coeff: not finite");
        for (const auto& [q, a] : t.string.axes) {
            if (q < 0 || q >= model.n_qubits)
                throw ParseError("terms[" + std::to_string(i) + "]: qubit " +
                                 std::to_string(q) + " out of range for a " +
                                 std::to_string(model.n_qubits) + "-qubit model");
        }
    }
}

} // namespace

SpinModel parse_model(const std::string& document) {
    json j;
    try {
        j = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model document is not valid JSON: ") +
                         e.what());
    }
    if (!j.is_object()) throw ParseError("model document must be a JSON object");
    if (!j.contains("qubits") || !j["qubits"].is_number_integer())
        throw ParseError("qubits: required integer field");

    SpinModel model;
    model.n_qubits = j["qubits"].get<int>();
    if (j.contains("shift")) {
        if (!j["shift"].is_number()) throw ParseError("shift: must be a real");
        model.shift = j["shift"].get<double>();
    }
    if (j.contains("terms")) {
        if (!j["terms"].is_array()) throw ParseError("terms: must be an array");
        size_t ti = 0;
        for (const auto& jt : j["terms"]) {
            if (!jt.is_object() || !jt.contains("coeff") || !jt["coeff"].is_number())
                throw ParseError("terms[" + std::to_string(ti) +
                                 "]: expected {coeff, ops}");
            Term term;
            term.coeff = jt["coeff"].get<double>();
            if (jt.contains("ops")) {
                if (!jt["ops"].is_array())
                    throw ParseError("terms[" + std::to_string(ti) +
                                     "].ops: must be an array");
                size_t oi = 0;
                for (const auto& jo : jt["ops"]) {
                    if (!jo.is_object() || !jo.contains("qubit") ||
                        !jo["qubit"].is_number_integer() || !jo.contains("axis") ||
                        !jo["axis"].is_string())
                        throw ParseError("terms[" + std::to_string(ti) + "].ops[" +
                                         std::to_string(oi) +
                                         "]: expected {qubit, axis}");
                    int q = jo["qubit"].get<int>();
                    Axis a = axis_from_string(jo["axis"].get<std::string>(), ti, oi);
                    if (term.string.axes.count(q))
                        throw ParseError("terms[" + std::to_string(ti) +
                                         "]: duplicate qubit " + std::to_string(q));
                    term.string.axes.emplace(q, a);
                    ++oi;
                }
            }
            model.terms.push_back(std::move(term));
            ++ti;
        }
    }
    validate(model);
    return model;
}

std::string serialize_model(const SpinModel& model) {
    std::ostringstream out;
    out << "{\n  \"qubits\": " << model.n_qubits << ",\n  \"shift\": "
        << format_real(model.shift) << ",\n  \"terms\": [";
    for (size_t i = 0; i < model.terms.size(); ++i) {
        const Term& t = model.terms[i];
        out << (i ? ",\n    " : "\n    ");
        out << "{\"coeff\": " << format_real(t.coeff) << ", \"ops\": [";
        bool first = true;
        for (const auto& [q, a] : t.string.axes) {
            if (!first) out << ", ";
            first = false;
            out << "{\"qubit\": " << q << ", \"axis\": \""
                << static_cast<char>(a) << "\"}";
        }
        out << "]}";
    }
    out << (model.terms.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

TotalModel lift_total(const SpinModel& model) {
    TotalModel total;
    total.inner = model;
    total.total_terms.reserve(model.terms.size() + 1);
    for (const Term& t : model.terms) {
        Term lifted;
        lifted.coeff = t.coeff;
        lifted.string.axes.emplace(0, Axis::Z);
        for (const auto& [q, a] : t.string.axes)
            lifted.string.axes.emplace(q + 1, a);
        total.total_terms.push_back(std::move(lifted));
    }
    if (model.shift != 0.0) {
        Term shift_term;
        shift_term.coeff = model.shift;
        shift_term.string.axes.emplace(0, Axis::Z);
        total.total_terms.push_back(std::move(shift_term));
    }
    return total;
}

std::vector<double> diagonal_energies(const SpinModel& model,
                                      bool include_shift) {
    if (!model.is_diagonal())
        throw Error("diagonal_energies: model has non-Z terms");
    const size_t dim = size_t{1} << model.n_qubits;
    std::vector<double> energies(dim, include_shift ? model.shift : 0.0);

    // Precompute bit masks per term; sign of term k is the parity of
    // (index & mask).
    for (const Term& t : model.terms) {
        size_t mask = 0;
        for (const auto& [q, a] : t.string.axes) mask |= size_t{1} << q;
        for (size_t k = 0; k < dim; ++k) {
            bool odd = std::popcount(k & mask) & 1;
            energies[k] += odd ? -t.coeff : t.coeff;
        }
    }
    return energies;
}

double spectral_bound(const SpinModel& model) {
    double bound = model.shift;
    for (const Term& t : model.terms) bound += std::abs(t.coeff);
    return bound;
}

double suggest_shift(const SpinModel& model, double margin) {
    SpinModel unshifted = model;
    unshifted.shift = 0.0;
    return spectral_bound(unshifted) + margin;
}

} // namespace probespec
