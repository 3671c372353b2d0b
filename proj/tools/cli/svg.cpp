// Copyright 2026 The bridgevario Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "bridgevario/error.hpp"

namespace bridgevario::cli {
namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 50.0;

std::string fixed(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

std::string short_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", v);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void widen_if_flat() {
    if (hi - lo <= 0.0) {
      const double pad = lo == 0.0 ? 1.0 : 0.5 * std::abs(lo);
      lo -= pad;
      hi += pad;
    }
  }
};

// Tick positions in axis coordinates (log10 units for log axes).
std::vector<double> linear_ticks(const Range& r) {
  const double raw = (r.hi - r.lo) / 5.0;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double ratio = raw / magnitude;
  const double step = magnitude * (ratio < 1.5 ? 1.0 : ratio < 3.5 ? 2.0 : ratio < 7.5 ? 5.0 : 10.0);
  std::vector<double> ticks;
  for (double t = std::ceil(r.lo / step) * step; t <= r.hi + 1e-9 * step; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

std::vector<double> decade_ticks(const Range& r) {
  std::vector<double> ticks;
  for (double t = std::ceil(r.lo - 1e-12); t <= r.hi + 1e-12; t += 1.0) ticks.push_back(t);
  return ticks;
}

}  // namespace

std::string render_curve_svg(std::span<const Series> series,
                             const SvgOptions& options) {
  if (series.empty()) throw Error(ErrorKind::kEmptySeries, "no series to plot");
  Range xr, yr;
  for (const auto& s : series) {
    if (s.points.empty()) {
      throw Error(ErrorKind::kEmptySeries, "series '" + s.label + "' is empty");
    }
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        throw Error(ErrorKind::kNonFinite, "series '" + s.label + "' has non-finite values");
      }
      if (options.log_x && x <= 0.0) {
        throw Error(ErrorKind::kInvalidArgument, "log x axis needs x > 0");
      }
      xr.add(options.log_x ? std::log10(x) : x);
      yr.add(y);
    }
  }
  xr.widen_if_flat();
  yr.widen_if_flat();

  const double w = options.width;
  const double h = options.height;
  const double plot_w = w - kMarginLeft - kMarginRight;
  const double plot_h = h - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    const double ax = options.log_x ? std::log10(x) : x;
    return kMarginLeft + (ax - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto py = [&](double y) {
    return kMarginTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << options.width << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
      << options.width << ' ' << options.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\""
      << options.height << "\" fill=\"white\"/>\n"
      << "<rect x=\"" << fixed(kMarginLeft) << "\" y=\"" << fixed(kMarginTop)
      << "\" width=\"" << fixed(plot_w) << "\" height=\"" << fixed(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const double axis_y = kMarginTop + plot_h;
  for (double t : options.log_x ? decade_ticks(xr) : linear_ticks(xr)) {
    const double x = kMarginLeft + (t - xr.lo) / (xr.hi - xr.lo) * plot_w;
    const std::string label = options.log_x ? "1e" + short_number(t) : short_number(t);
    svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(axis_y) << "\" x2=\""
        << fixed(x) << "\" y2=\"" << fixed(axis_y + 5) << "\" stroke=\"black\"/>"
        << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(axis_y + 18)
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  for (double t : linear_ticks(yr)) {
    const double y = py(t);
    svg << "<line x1=\"" << fixed(kMarginLeft - 5) << "\" y1=\"" << fixed(y)
        << "\" x2=\"" << fixed(kMarginLeft) << "\" y2=\"" << fixed(y)
        << "\" stroke=\"black\"/>"
        << "<text x=\"" << fixed(kMarginLeft - 8) << "\" y=\"" << fixed(y + 4)
        << "\" text-anchor=\"end\">" << short_number(t) << "</text>\n";
  }
  svg << "<text x=\"" << fixed(kMarginLeft + plot_w / 2) << "\" y=\""
      << fixed(h - 10) << "\" text-anchor=\"middle\">" << escape(options.x_label)
      << "</text>\n"
      << "<text x=\"15\" y=\"" << fixed(kMarginTop + plot_h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << fixed(kMarginTop + plot_h / 2) << ")\">" << escape(options.y_label)
      << "</text>\n</g>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % kPalette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t p = 0; p < series[s].points.size(); ++p) {
      const auto& [x, y] = series[s].points[p];
      svg << (p ? " " : "") << fixed(px(x)) << ',' << fixed(py(y));
    }
    svg << "\"/>\n";
  }

  svg << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
  const double legend_x = kMarginLeft + plot_w + 12;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double y = kMarginTop + 12 + 16 * static_cast<double>(s);
    svg << "<line x1=\"" << fixed(legend_x) << "\" y1=\"" << fixed(y) << "\" x2=\""
        << fixed(legend_x + 20) << "\" y2=\"" << fixed(y) << "\" stroke=\""
        << kPalette[s % kPalette.size()] << "\" stroke-width=\"2\"/>"
        << "<text x=\"" << fixed(legend_x + 26) << "\" y=\"" << fixed(y + 4)
        << "\">" << escape(series[s].label) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace bridgevario::cli
