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

// probespec CLI: recover the energy spectrum of a Pauli-string Hamiltonian
// from the evolution of a probe spin.
//
//   probespec run      --model m.json [--engine exact|dense|shots] ...
//   probespec validate --model m.json [--tau EXPR]
//   probespec plot     --spectrum spectrum.csv --peaks peaks.json --out-file plot.svg

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "probespec/circuit.hpp"
#include "probespec/exact.hpp"
#include "probespec/model.hpp"
#include "probespec/oracle.hpp"
#include "probespec/plot.hpp"
#include "probespec/spectro.hpp"
#include "probespec/util.hpp"

namespace fs = std::filesystem;
using namespace probespec;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOracleMismatch = 3;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write " + path.string());
    out << content;
}

struct RunConfig {
    std::string model_path;
    std::string engine = "exact";
    std::string tau_expr = "pi/12";
    int n_max = 96;
    int shots = 4096;
    std::uint64_t seed = 0;
    std::string omega_min_expr, omega_max_expr, omega_step_expr;
    double threshold = 0.0; // 0 = default
    double min_separation = 0.0;
    double tol = 0.05;
    std::string out_dir = ".";
    bool mirror = false;
    bool extend_past_nyquist = false;
    bool oracle = false;
    bool strict = false;
};

Engine engine_from_name(const std::string& name) {
    if (name == "exact") return Engine::ExactDiagonal;
    if (name == "dense") return Engine::ExactDense;
    if (name == "shots") return Engine::CircuitShots;
    throw Error("unknown engine '" + name + "'");
}

int cmd_run(const RunConfig& cfg) {
    SpinModel model;
    try {
        model = parse_model(read_file(cfg.model_path));
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    const double tau = parse_pi_expr(cfg.tau_expr);
    if (tau <= 0.0 || cfg.n_max < 1) {
        std::cerr << "error: tau must be > 0 and nmax >= 1\n";
        return kExitInvalid;
    }
    const Engine engine = engine_from_name(cfg.engine);
    if (engine != Engine::ExactDense && !model.is_diagonal()) {
        std::cerr << "error: engine '" << cfg.engine
                  << "' supports Z-only models; use --engine dense\n";
        return kExitInvalid;
    }

    const TotalModel total = lift_total(model);
    const double time_horizon = cfg.n_max * tau;

    SampleOptions opts;
    opts.shots = cfg.shots;
    opts.seed = cfg.seed;
    opts.mirror = cfg.mirror;
    const TimeSeries series = sample_series(engine, total, tau, cfg.n_max, opts);

    const double nyq = M_PI / tau;
    double omega_min = cfg.extend_past_nyquist ? -2.0 * nyq : -nyq;
    double omega_max = -omega_min;
    double omega_step = nyq / 2000.0;
    if (!cfg.omega_min_expr.empty()) omega_min = parse_pi_expr(cfg.omega_min_expr);
    if (!cfg.omega_max_expr.empty()) omega_max = parse_pi_expr(cfg.omega_max_expr);
    if (!cfg.omega_step_expr.empty())
        omega_step = parse_pi_expr(cfg.omega_step_expr);
    if (!(omega_step > 0.0) || omega_min >= omega_max) {
        std::cerr << "error: empty or descending omega grid\n";
        return kExitInvalid;
    }
    std::vector<double> omegas;
    for (double w = omega_min; w <= omega_max + omega_step / 2; w += omega_step)
        omegas.push_back(w);

    const Spectrum spectrum = dft_spectrum(series, std::move(omegas));

    const double threshold = cfg.threshold > 0.0
                                 ? cfg.threshold
                                 : default_threshold(time_horizon,
                                                     total.n_qubits());
    const double min_sep = cfg.min_separation > 0.0
                               ? cfg.min_separation
                               : default_min_separation(time_horizon);
    const std::vector<Peak> peaks = find_peaks(spectrum, threshold, min_sep);
    PeakReport report =
        peaks_to_energies(peaks, model.shift, std::max(2.0 * omega_step, 0.02));

    const NyquistCheck nyquist = nyquist_check(spectral_bound(model), tau);
    if (!nyquist.ok)
        report.warnings.push_back(
            "spectral bound exceeds the Nyquist frequency " +
            format_real(nyq) + "; peaks beyond it alias with period " +
            format_real(nyquist.alias_period));

    nlohmann::json j = report_to_json(
        report, series.stderrs.empty()
                    ? std::nullopt
                    : std::optional<double>(noise_floor(series)));

    bool oracle_clean = true;
    if (cfg.oracle) {
        const std::vector<Level> levels = brute_energies(model);
        std::vector<double> oracle_energies;
        for (const Level& l : levels) oracle_energies.push_back(l.energy);
        const ComparisonReport cmp =
            compare(report.energies_inner, oracle_energies, cfg.tol);
        oracle_clean = cmp.missed.empty() && cmp.spurious.empty();
        j["oracle_comparison"] = comparison_to_json(cmp);
    }

    const fs::path out_dir(cfg.out_dir);
    fs::create_directories(out_dir);
    {
        std::ostringstream ss;
        write_timeseries_csv(ss, series);
        write_file(out_dir / "timeseries.csv", ss.str());
    }
    {
        std::ostringstream ss;
        write_spectrum_csv(ss, spectrum);
        write_file(out_dir / "spectrum.csv", ss.str());
    }
    write_file(out_dir / "peaks.json", j.dump(2) + "\n");
    write_file(out_dir / "plot.svg", render_spectrum_svg(spectrum, peaks));

    std::cout << "engine=" << cfg.engine << " tau=" << format_real(tau)
              << " nmax=" << cfg.n_max << " T=" << format_real(time_horizon)
              << '\n';
    std::cout << "peaks:";
    for (const Peak& p : report.peaks)
        std::cout << ' ' << format_real(p.omega_center);
    std::cout << "\nenergies_inner:";
    for (double e : report.energies_inner) std::cout << ' ' << format_real(e);
    std::cout << '\n';
    for (const std::string& w : report.warnings)
        std::cout << "warning: " << w << '\n';

    if (cfg.oracle && cfg.strict && !oracle_clean) {
        std::cerr << "error: recovered levels disagree with the brute-force "
                     "oracle\n";
        return kExitOracleMismatch;
    }
    return 0;
}

int cmd_validate(const std::string& model_path, const std::string& tau_expr,
                 const std::string& engine) {
    SpinModel model;
    try {
        model = parse_model(read_file(model_path));
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    std::cout << "qubits: " << model.n_qubits << '\n'
              << "terms: " << model.terms.size() << '\n'
              << "shift: " << format_real(model.shift) << '\n'
              << "diagonal: " << (model.is_diagonal() ? "yes" : "no") << '\n'
              << "spectral bound (H_T): " << format_real(spectral_bound(model))
              << '\n';
    if (!model.is_diagonal() && engine != "dense")
        std::cout << "warning: model has X/Y terms; the exact-diagonal and "
                     "shots engines are unavailable, use --engine dense\n";
    if (!tau_expr.empty()) {
        const double tau = parse_pi_expr(tau_expr);
        const NyquistCheck check = nyquist_check(spectral_bound(model), tau);
        std::cout << "nyquist (pi/tau): " << format_real(M_PI / tau) << '\n';
        if (check.ok)
            std::cout << "nyquist check: ok\n";
        else
            std::cout << "nyquist check: WARNING, peaks alias with period "
                      << format_real(check.alias_period) << '\n';
    }
    return 0;
}

int cmd_plot(const std::string& spectrum_path, const std::string& peaks_path,
             const std::string& out_path) {
    Spectrum spectrum;
    PeakReport report;
    try {
        std::istringstream sin(read_file(spectrum_path));
        spectrum = read_spectrum_csv(sin);
        report = report_from_json(nlohmann::json::parse(read_file(peaks_path)));
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed peaks JSON: " << e.what() << '\n';
        return kExitInvalid;
    }
    write_file(out_path, render_spectrum_svg(spectrum, report.peaks));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probe-spin energy spectroscopy for Pauli Hamiltonians"};
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* run = app.add_subcommand("run", "Run the full pipeline");
    run->add_option("--model", cfg.model_path, "Model JSON file")->required();
    run->add_option("--engine", cfg.engine, "exact | dense | shots")
        ->check(CLI::IsMember({"exact", "dense", "shots"}));
    run->add_option("--tau", cfg.tau_expr, "Time step (accepts a*pi/b)");
    run->add_option("--nmax", cfg.n_max, "Samples per side of t = 0");
    run->add_option("--shots", cfg.shots, "Shots per sample (shots engine)");
    run->add_option("--seed", cfg.seed, "RNG seed (shots engine)");
    run->add_option("--omega-min", cfg.omega_min_expr, "Grid start");
    run->add_option("--omega-max", cfg.omega_max_expr, "Grid end");
    run->add_option("--omega-step", cfg.omega_step_expr, "Grid step");
    run->add_option("--threshold", cfg.threshold, "Peak threshold");
    run->add_option("--min-sep", cfg.min_separation, "Peak separation");
    run->add_option("--tol", cfg.tol, "Oracle match tolerance");
    run->add_option("--out", cfg.out_dir, "Output directory");
    run->add_flag("--mirror", cfg.mirror, "Mirror the n >= 0 samples");
    run->add_flag("--extend-past-nyquist", cfg.extend_past_nyquist,
                  "Extend the default grid to [-2pi/tau, 2pi/tau]");
    run->add_flag("--oracle", cfg.oracle, "Grade against brute-force levels");
    run->add_flag("--strict", cfg.strict, "Exit 3 on oracle mismatch");

    std::string v_model, v_tau, v_engine = "exact";
    CLI::App* validate = app.add_subcommand("validate", "Check a model file");
    validate->add_option("--model", v_model, "Model JSON file")->required();
    validate->add_option("--tau", v_tau, "Time step for Nyquist advice");
    validate->add_option("--engine", v_engine, "Planned engine");

    std::string p_spectrum, p_peaks, p_out = "plot.svg";
    CLI::App* plot = app.add_subcommand("plot", "Render spectrum.csv to SVG");
    plot->add_option("--spectrum", p_spectrum, "spectrum.csv")->required();
    plot->add_option("--peaks", p_peaks, "peaks.json")->required();
    plot->add_option("--out-file", p_out, "Output SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(cfg);
        if (validate->parsed()) return cmd_validate(v_model, v_tau, v_engine);
        if (plot->parsed()) return cmd_plot(p_spectrum, p_peaks, p_out);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
