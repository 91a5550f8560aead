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

#include "probespec/spectro.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <fftw3.h>
#include <nlohmann/json.hpp>

#include "probespec/circuit.hpp"

namespace probespec {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

std::vector<double> grid_times(double tau, int n_max, bool nonneg_only) {
    std::vector<double> times;
    const int start = nonneg_only ? 0 : -n_max;
    times.reserve(n_max - start + 1);
    for (int n = start; n <= n_max; ++n) times.push_back(n * tau);
    return times;
}

void check_series_bounds(const TimeSeries& series) {
    for (size_t i = 0; i < series.values.size(); ++i) {
        const double slack =
            series.stderrs.empty() ? 0.0 : 3.0 * series.stderrs[i];
        if (std::abs(series.values[i]) > 1.0 + slack + 1e-9)
            throw Error("sample_series: |A| exceeds 1 beyond shot noise");
    }
}

double grid_step(const Spectrum& spectrum) {
    if (spectrum.omegas.size() < 3)
        throw Error("find_peaks: need at least three grid points");
    const double step = spectrum.omegas[1] - spectrum.omegas[0];
    const double span = spectrum.omegas.back() - spectrum.omegas.front();
    for (size_t i = 1; i < spectrum.omegas.size(); ++i) {
        const double d = spectrum.omegas[i] - spectrum.omegas[i - 1];
        if (std::abs(d - step) > 1e-9 * std::max(1.0, span))
            throw Error("find_peaks: frequency grid is not uniform");
    }
    return step;
}

std::vector<double> csv_row(const std::string& line, size_t expected,
                            const char* what) {
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        size_t pos = 0;
        double v;
        try {
            v = std::stod(cell, &pos);
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + ": bad numeric field '" +
                             cell + "'");
        }
        if (pos != cell.size())
            throw ParseError(std::string(what) + ": bad numeric field '" +
                             cell + "'");
        fields.push_back(v);
    }
    if (fields.size() != expected)
        throw ParseError(std::string(what) + ": expected " +
                         std::to_string(expected) + " fields per row");
    return fields;
}

} // namespace

TimeSeries sample_series(Engine engine, const TotalModel& total, double tau,
                         int n_max, const SampleOptions& opts) {
    if (tau <= 0.0) throw Error("sample_series: tau must be positive");
    if (n_max < 1) throw Error("sample_series: n_max must be >= 1");

    TimeSeries series;
    series.tau = tau;
    series.n_max = n_max;
    const std::vector<double> times = grid_times(tau, n_max, opts.mirror);

    std::vector<double> vals;
    std::vector<double> errs;
    switch (engine) {
        case Engine::ExactDiagonal:
            vals = series_diagonal(total, times);
            break;
        case Engine::ExactDense: {
            const Eigen::MatrixXcd h = pauli_to_dense(total);
            vals = series_dense(h, plus_state(total.n_qubits()), times);
            break;
        }
        case Engine::CircuitShots: {
            vals.reserve(times.size());
            errs.reserve(times.size());
            for (size_t i = 0; i < times.size(); ++i) {
                const Circuit c = compile_protocol(total, times[i]);
                const StateVector psi = run_statevector(c);
                const int n = static_cast<int>(i) + (opts.mirror ? 0 : -n_max);
                const ShotResult r = sample_shots(
                    psi, opts.shots,
                    mix_seed(opts.seed, static_cast<std::uint64_t>(
                                            n + n_max)));
                vals.push_back(r.estimate);
                errs.push_back(r.stderror);
            }
            break;
        }
    }

    if (opts.mirror) {
        series.values.assign(2 * n_max + 1, 0.0);
        if (!errs.empty()) series.stderrs.assign(2 * n_max + 1, 0.0);
        for (int n = 0; n <= n_max; ++n) {
            series.values[n_max + n] = series.values[n_max - n] = vals[n];
            if (!errs.empty())
                series.stderrs[n_max + n] = series.stderrs[n_max - n] = errs[n];
        }
    } else {
        series.values = std::move(vals);
        series.stderrs = std::move(errs);
    }
    check_series_bounds(series);
    return series;
}

Spectrum dft_spectrum(const TimeSeries& series, std::vector<double> omegas) {
    if (omegas.empty()) throw Error("dft_spectrum: empty frequency grid");
    Spectrum spectrum;
    spectrum.time_horizon = series.time_horizon();
    spectrum.values.reserve(omegas.size());

    const double scale = series.tau / kTwoPi;
    for (double omega : omegas) {
        complex acc = 0.0;
        for (int n = -series.n_max; n <= series.n_max; ++n)
            acc += series.value(n) * std::polar(1.0, omega * series.tau * n);
        spectrum.values.push_back(scale * acc);
    }
    spectrum.omegas = std::move(omegas);
    return spectrum;
}

Spectrum dft_spectrum_uniform(const TimeSeries& series, int m) {
    if (m < 2 * series.n_max + 1 || (m & (m - 1)) != 0)
        throw Error("dft_spectrum_uniform: m must be a power of two covering "
                    "the series");

    // sigma(omega_k) = (tau/2pi) sum_n A_n e^{2 pi i k n / m}: an inverse DFT
    // of the series wrapped into an m-point buffer.
    std::vector<complex> buf(m, 0.0);
    for (int n = -series.n_max; n <= series.n_max; ++n)
        buf[((n % m) + m) % m] += series.value(n);

    std::vector<complex> out(m);
    fftw_plan plan = fftw_plan_dft_1d(
        m, reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
        FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    Spectrum spectrum;
    spectrum.time_horizon = series.time_horizon();
    const double scale = series.tau / kTwoPi;
    const double step = kTwoPi / (m * series.tau);
    spectrum.omegas.reserve(m + 1);
    spectrum.values.reserve(m + 1);
    for (int k = -m / 2; k <= m / 2; ++k) {
        spectrum.omegas.push_back(k * step);
        spectrum.values.push_back(scale * out[((k % m) + m) % m]);
    }
    return spectrum;
}

complex kernel_closed_form(const SpectralCoefficients& g, double omega,
                           double tau, int n_max) {
    if (tau <= 0.0) throw Error("kernel_closed_form: tau must be positive");
    const double scale = tau / kTwoPi;
    const int m = 2 * n_max + 1;
    complex acc = 0.0;
    for (const SpectralLine& line : g) {
        const double x = (omega - 2.0 * line.omega) * tau / 2.0;
        const double d = std::remainder(x, M_PI);
        const double bracket =
            std::abs(d) < 1e-15 ? m : std::sin(m * d) / std::sin(d);
        acc += line.g * (scale * bracket);
    }
    return acc;
}

complex sinc_spectrum(const SpectralCoefficients& g, double omega, double T) {
    if (T <= 0.0) throw Error("sinc_spectrum: T must be positive");
    complex acc = 0.0;
    for (const SpectralLine& line : g) {
        const double phi = omega - 2.0 * line.omega;
        const double v =
            std::abs(phi) < 1e-12 ? T / M_PI : std::sin(phi * T) / (M_PI * phi);
        acc += line.g * v;
    }
    return acc;
}

std::vector<Peak> find_peaks(const Spectrum& spectrum, double threshold,
                             double min_separation) {
    if (threshold <= 0.0) throw Error("find_peaks: threshold must be positive");
    const double step = grid_step(spectrum);
    const size_t n = spectrum.omegas.size();

    std::vector<size_t> candidates;
    for (size_t i = 1; i + 1 < n; ++i) {
        const double v = spectrum.values[i].real();
        if (v >= threshold && v > spectrum.values[i - 1].real() &&
            v >= spectrum.values[i + 1].real())
            candidates.push_back(i);
    }
    // Larger peaks claim their neighborhood first.
    std::sort(candidates.begin(), candidates.end(), [&](size_t a, size_t b) {
        return spectrum.values[a].real() > spectrum.values[b].real();
    });
    std::vector<size_t> accepted;
    for (size_t i : candidates) {
        const bool clear = std::all_of(
            accepted.begin(), accepted.end(), [&](size_t j) {
                return std::abs(spectrum.omegas[i] - spectrum.omegas[j]) >=
                       min_separation;
            });
        if (clear) accepted.push_back(i);
    }

    std::vector<Peak> peaks;
    peaks.reserve(accepted.size());
    for (size_t i : accepted) {
        const double ym = spectrum.values[i - 1].real();
        const double y0 = spectrum.values[i].real();
        const double yp = spectrum.values[i + 1].real();
        const double denom = ym - 2.0 * y0 + yp;
        const double delta = denom == 0.0 ? 0.0 : 0.5 * (ym - yp) / denom;

        Peak p;
        p.omega_center = spectrum.omegas[i] + delta * step;
        p.amplitude = y0 - 0.25 * (ym - yp) * delta;

        // Half width at half maximum, scanned on the grid.
        const double half = p.amplitude / 2.0;
        double left = spectrum.omegas.front(), right = spectrum.omegas.back();
        for (size_t k = i; k-- > 0;) {
            if (spectrum.values[k].real() <= half) {
                const double y1 = spectrum.values[k].real();
                const double y2 = spectrum.values[k + 1].real();
                const double f = (half - y1) / (y2 - y1);
                left = spectrum.omegas[k] + f * step;
                break;
            }
        }
        for (size_t k = i + 1; k < n; ++k) {
            if (spectrum.values[k].real() <= half) {
                const double y1 = spectrum.values[k - 1].real();
                const double y2 = spectrum.values[k].real();
                const double f = (y1 - half) / (y1 - y2);
                right = spectrum.omegas[k - 1] + f * step;
                break;
            }
        }
        p.half_width = (right - left) / 2.0;
        peaks.push_back(p);
    }

    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        return a.omega_center < b.omega_center;
    });
    return peaks;
}

PeakReport peaks_to_energies(const std::vector<Peak>& peaks, double shift,
                             double sym_tol) {
    PeakReport report;
    report.peaks = peaks;
    report.shift = shift;
    std::sort(report.peaks.begin(), report.peaks.end(),
              [](const Peak& a, const Peak& b) {
                  return a.omega_center < b.omega_center;
              });

    std::vector<double> negatives;
    for (const Peak& p : report.peaks) {
        if (p.omega_center > 0.0) {
            report.energies_total.push_back(p.omega_center / 2.0);
            report.energies_inner.push_back(p.omega_center / 2.0 - shift);
        } else if (p.omega_center < 0.0) {
            negatives.push_back(p.omega_center);
        }
    }

    // Negative-frequency peaks must mirror the positive ones.
    std::vector<bool> used(negatives.size(), false);
    for (double e : report.energies_total) {
        const double want = -2.0 * e;
        bool found = false;
        for (size_t i = 0; i < negatives.size(); ++i) {
            if (!used[i] && std::abs(negatives[i] - want) <= sym_tol) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found)
            report.warnings.push_back(
                "no mirror peak found for omega = " + format_real(2.0 * e));
    }
    for (size_t i = 0; i < negatives.size(); ++i)
        if (!used[i])
            report.warnings.push_back("unmatched negative peak at omega = " +
                                      format_real(negatives[i]));
    return report;
}

NyquistCheck nyquist_check(double bound, double tau) {
    if (tau <= 0.0) throw Error("nyquist_check: tau must be positive");
    NyquistCheck check;
    check.alias_period = kTwoPi / tau;
    check.ok = 2.0 * bound < M_PI / tau;
    return check;
}

double default_threshold(double time_horizon, int n_total_qubits) {
    return 0.25 * (time_horizon / M_PI) * std::pow(2.0, -n_total_qubits);
}

double default_min_separation(double time_horizon) {
    return 8.0 * M_PI / time_horizon;
}

double noise_floor(const TimeSeries& series) {
    double sum = 0.0;
    for (double s : series.stderrs) sum += s * s;
    return series.tau / kTwoPi * std::sqrt(sum);
}

void write_timeseries_csv(std::ostream& out, const TimeSeries& series) {
    out << "n,t,a,stderr\n";
    for (int n = -series.n_max; n <= series.n_max; ++n) {
        const size_t i = static_cast<size_t>(n + series.n_max);
        const double err = series.stderrs.empty() ? 0.0 : series.stderrs[i];
        out << n << ',' << format_real(n * series.tau) << ','
            << format_real(series.values[i]) << ',' << format_real(err)
            << '\n';
    }
}

TimeSeries read_timeseries_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "n,t,a,stderr")
        throw ParseError("timeseries CSV: missing 'n,t,a,stderr' header");

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(csv_row(line, 4, "timeseries CSV"));
    }
    if (rows.size() < 3 || rows.size() % 2 == 0)
        throw ParseError("timeseries CSV: expected 2N+1 rows, N >= 1");

    TimeSeries series;
    series.n_max = static_cast<int>(rows.size() / 2);
    if (rows[0][0] != -series.n_max)
        throw ParseError("timeseries CSV: rows must start at n = -N");
    series.tau = rows[series.n_max + 1][1];
    bool any_err = false;
    for (size_t i = 0; i < rows.size(); ++i) {
        series.values.push_back(rows[i][2]);
        if (rows[i][3] != 0.0) any_err = true;
    }
    if (any_err)
        for (const auto& r : rows) series.stderrs.push_back(r[3]);
    return series;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
    out << "omega,re,im\n";
    for (size_t i = 0; i < spectrum.omegas.size(); ++i)
        out << format_real(spectrum.omegas[i]) << ','
            << format_real(spectrum.values[i].real()) << ','
            << format_real(spectrum.values[i].imag()) << '\n';
}

Spectrum read_spectrum_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "omega,re,im")
        throw ParseError("spectrum CSV: missing 'omega,re,im' header");
    Spectrum spectrum;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto row = csv_row(line, 3, "spectrum CSV");
        spectrum.omegas.push_back(row[0]);
        spectrum.values.emplace_back(row[1], row[2]);
    }
    if (spectrum.omegas.empty()) throw ParseError("spectrum CSV: no data rows");
    return spectrum;
}

nlohmann::json report_to_json(const PeakReport& report,
                              std::optional<double> noise) {
    json j;
    j["peaks"] = json::array();
    for (const Peak& p : report.peaks)
        j["peaks"].push_back({{"omega", p.omega_center},
                              {"amplitude", p.amplitude},
                              {"half_width", p.half_width}});
    j["energies_total"] = report.energies_total;
    j["energies_inner"] = report.energies_inner;
    j["warnings"] = report.warnings;
    j["shift"] = report.shift;
    if (noise) j["noise_floor"] = *noise;
    return j;
}

PeakReport report_from_json(const nlohmann::json& j) {
    PeakReport report;
    for (const auto& jp : j.at("peaks"))
        report.peaks.push_back({jp.at("omega").get<double>(),
                                jp.at("amplitude").get<double>(),
                                jp.at("half_width").get<double>()});
    report.energies_total = j.at("energies_total").get<std::vector<double>>();
    report.energies_inner = j.at("energies_inner").get<std::vector<double>>();
    report.warnings = j.at("warnings").get<std::vector<std::string>>();
    report.shift = j.value("shift", 0.0);
    return report;
}

} // namespace probespec
