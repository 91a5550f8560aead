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

#include "probespec/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace probespec {

namespace {

constexpr double kWidth = 900.0, kHeight = 520.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 20.0, kBottom = 50.0;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Largest step of the form {1,2,5}*10^k giving at most `max_ticks` ticks.
double tick_step(double span, int max_ticks) {
    const double raw = span / max_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw) return m * mag;
    return 10.0 * mag;
}

} // namespace

std::string render_spectrum_svg(const Spectrum& spectrum,
                                const std::vector<Peak>& peaks) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";

    const double px0 = kLeft, px1 = kWidth - kRight;
    const double py0 = kHeight - kBottom, py1 = kTop;

    if (spectrum.omegas.empty()) {
        svg << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px1
            << "\" y2=\"" << py0 << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px0
            << "\" y2=\"" << py1 << "\" stroke=\"black\"/>\n";
        svg << "</svg>\n";
        return svg.str();
    }

    const double xmin = spectrum.omegas.front();
    const double xmax = spectrum.omegas.back();
    double ymin = 0.0, ymax = 0.0;
    for (const complex& v : spectrum.values) {
        ymin = std::min(ymin, v.real());
        ymax = std::max(ymax, v.real());
    }
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const auto to_x = [&](double w) {
        return px0 + (w - xmin) / (xmax - xmin) * (px1 - px0);
    };
    const auto to_y = [&](double v) {
        return py0 + (v - ymin) / (ymax - ymin) * (py1 - py0);
    };

    // Axes and ticks.
    svg << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px1
        << "\" y2=\"" << py0 << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px0
        << "\" y2=\"" << py1 << "\" stroke=\"black\"/>\n";
    const double xstep = tick_step(xmax - xmin, 12);
    for (double w = std::ceil(xmin / xstep) * xstep; w <= xmax + 1e-12 * xstep;
         w += xstep) {
        const double x = to_x(w);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << py0 << "\" x2=\""
            << fmt(x) << "\" y2=\"" << py0 + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << py0 + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(w)
            << "</text>\n";
    }
    const double ystep = tick_step(ymax - ymin, 8);
    for (double v = std::ceil(ymin / ystep) * ystep; v <= ymax + 1e-12 * ystep;
         v += ystep) {
        const double y = to_y(v);
        svg << "<line x1=\"" << px0 - 5 << "\" y1=\"" << fmt(y) << "\" x2=\""
            << px0 << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px0 - 8 << "\" y=\"" << fmt(y + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(v)
            << "</text>\n";
    }
    svg << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << kHeight - 10
        << "\" font-size=\"14\" text-anchor=\"middle\">omega</text>\n";
    svg << "<text x=\"16\" y=\"" << (py0 + py1) / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
           "16 "
        << (py0 + py1) / 2 << ")\">Re sigma(omega)</text>\n";

    // Spectrum polyline.
    svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" "
           "points=\"";
    for (size_t i = 0; i < spectrum.omegas.size(); ++i) {
        if (i) svg << ' ';
        svg << fmt(to_x(spectrum.omegas[i])) << ','
            << fmt(to_y(spectrum.values[i].real()));
    }
    svg << "\"/>\n";

    // Peak markers.
    for (const Peak& p : peaks) {
        svg << "<circle cx=\"" << fmt(to_x(p.omega_center)) << "\" cy=\""
            << fmt(to_y(p.amplitude))
            << "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" "
               "stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt(to_x(p.omega_center)) << "\" y=\""
            << fmt(to_y(p.amplitude) - 8)
            << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#d62728\">"
            << fmt(p.omega_center) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace probespec
