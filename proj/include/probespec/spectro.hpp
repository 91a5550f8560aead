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
 * Windowed Fourier estimation on the symmetric time grid t_n = n*tau,
 * n = -N..N: the discrete estimator, its closed-form kernel and sinc limit,
 * peak location, and the peak -> energy mapping.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "probespec/exact.hpp"
#include "probespec/model.hpp"

namespace probespec {

/// Probe expectation samples A(t_n) on the symmetric grid. stderrs is empty
/// for exact engines or holds one per-sample standard error for shot data.
struct TimeSeries {
    double tau = 0.0;
    int n_max = 0;
    std::vector<double> values;  // 2*n_max + 1, index n + n_max
    std::vector<double> stderrs; // empty or same length as values

    double time_horizon() const { return n_max * tau; } // T = N*tau
    double value(int n) const { return values[n + n_max]; }
};

struct Spectrum {
    std::vector<double> omegas; // strictly increasing
    std::vector<complex> values;
    double time_horizon = 0.0;
};

struct Peak {
    double omega_center = 0.0;
    double amplitude = 0.0;
    double half_width = 0.0;
};

struct PeakReport {
    std::vector<Peak> peaks; // sorted by center
    std::vector<double> energies_total; // omega/2 per positive peak
    std::vector<double> energies_inner; // omega/2 - C
    std::vector<std::string> warnings;
    double shift = 0.0;
};

enum class Engine { ExactDiagonal, ExactDense, CircuitShots };

struct SampleOptions {
    int shots = 4096;
    std::uint64_t seed = 0;
    /// Compute only n >= 0 and mirror (valid for the |+...+> initial state,
    /// where A is even in t).
    bool mirror = false;
};

/// Samples A(t_n) for n = -N..N with the chosen engine.
TimeSeries sample_series(Engine engine, const TotalModel& total, double tau,
                         int n_max, const SampleOptions& opts = {});

/// Plain Riemann-sum estimator sigma(omega) = (tau/2pi) sum_n A_n
/// exp(i omega t_n), evaluated on an arbitrary frequency grid. No window is
/// applied. Throws Error on an empty grid.
Spectrum dft_spectrum(const TimeSeries& series, std::vector<double> omegas);

/// Same estimator on the canonical uniform grid omega_k = k*2pi/(m*tau),
/// k = -m/2..m/2, evaluated via a zero-padded FFT. m must be a power of two
/// with m >= 2*n_max + 1. Matches dft_spectrum on the shared grid.
Spectrum dft_spectrum_uniform(const TimeSeries& series, int m);

/// Closed form of the estimator for a pure exponential series: per line,
/// g * (tau/2pi) * [1 + 2 cos((w-2wj)(T+tau)/2) sin((w-2wj)T/2)/sin((w-2wj)tau/2)]
/// with T = N*tau. The bracket equals the Dirichlet ratio
/// sin((2N+1)d)/sin(d) with d = (w-2wj)tau/2 reduced mod pi, which is how it
/// is evaluated; the removable singularity at d = 0 takes the limit 2N+1.
complex kernel_closed_form(const SpectralCoefficients& g, double omega,
                           double tau, int n_max);

/// tau -> 0 limit at fixed T: sum_j g_j sin((w-2wj)T) / (pi (w-2wj)),
/// value g_j*T/pi at w = 2wj.
complex sinc_spectrum(const SpectralCoefficients& g, double omega, double T);

/// Local maxima of Re sigma above `threshold`, separated by at least
/// `min_separation` (larger peaks win), each center and amplitude refined by
/// three-point quadratic interpolation. Requires a uniform grid.
std::vector<Peak> find_peaks(const Spectrum& spectrum, double threshold,
                             double min_separation);

/// Maps positive-frequency peaks to energies: E_total = omega/2,
/// E_inner = omega/2 - C. Negative peaks only cross-check the mirror
/// symmetry; asymmetries within sym_tol of nothing become warnings.
PeakReport peaks_to_energies(const std::vector<Peak>& peaks, double shift,
                             double sym_tol = 0.05);

struct NyquistCheck {
    bool ok = false;
    double alias_period = 0.0; // 2*pi/tau
};

/// ok iff 2*bound < pi/tau; otherwise peaks fold back with period 2pi/tau.
NyquistCheck nyquist_check(double bound, double tau);

/// Default peak threshold 0.25 * (T/pi) * 2^{-n_total_qubits}, the Ising
/// amplitude floor g_min * T/pi scaled by 1/4.
double default_threshold(double time_horizon, int n_total_qubits);

/// Default peak separation 8*pi/T; wide enough to swallow the Dirichlet
/// sidelobes that clear the default threshold.
double default_min_separation(double time_horizon);

/// Spectrum-amplitude noise floor (tau/2pi) * sqrt(sum stderr^2); zero for
/// exact series.
double noise_floor(const TimeSeries& series);

// CSV and JSON interchange. timeseries CSV: header "n,t,a,stderr"; spectrum
// CSV: header "omega,re,im"; reals with 17 significant digits.
void write_timeseries_csv(std::ostream& out, const TimeSeries& series);
TimeSeries read_timeseries_csv(std::istream& in);
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);
Spectrum read_spectrum_csv(std::istream& in);
nlohmann::json report_to_json(const PeakReport& report,
                              std::optional<double> noise = std::nullopt);
PeakReport report_from_json(const nlohmann::json& j);

} // namespace probespec
