// Copyright 2026 The swgeo Authors
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

#include "swgeo/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace swgeo::svg {
namespace {

constexpr double kPanelWidth = 380.0;
constexpr double kPanelHeight = 300.0;
constexpr double kLeft = 62.0;
constexpr double kRight = 16.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 48.0;
constexpr double kCaption = 28.0;

constexpr std::array<const char*, 6> kColors = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

struct Axis {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool log = false;

  bool usable(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
  double map(double v) const { return log ? std::log10(v) : v; }
  void include(double v) {
    if (!usable(v)) return;
    lo = std::min(lo, map(v));
    hi = std::max(hi, map(v));
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      const double pad = std::max(std::abs(lo) * 0.1, 0.5);
      lo -= pad;
      hi += pad;
    } else if (!log) {
      const double pad = 0.05 * (hi - lo);
      lo -= pad;
      hi += pad;
    }
  }
  double fraction(double v) const { return (map(v) - lo) / (hi - lo); }
  std::string tick_label(double u) const {
    return log ? fmt::format("1e{:.3g}", u) : fmt::format("{:.3g}", u);
  }
};

void render_panel(std::string& out, const Panel& panel, double x0, double y0) {
  Axis ax{.log = panel.log_x};
  Axis ay{.log = panel.log_y};
  for (const auto& s : panel.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (ax.usable(s.x[i]) && ay.usable(s.y[i])) {
        ax.include(s.x[i]);
        ay.include(s.y[i]);
      }
    }
  }
  for (const auto& m : panel.markers) {
    ax.include(m.x);
    ay.include(m.y);
  }
  ax.finish();
  ay.finish();

  const double pw = kPanelWidth - kLeft - kRight;
  const double ph = kPanelHeight - kTop - kBottom;
  const double left = x0 + kLeft;
  const double top = y0 + kTop;
  auto px = [&](double v) { return left + ax.fraction(v) * pw; };
  auto py = [&](double v) { return top + (1.0 - ay.fraction(v)) * ph; };

  out += fmt::format(
      "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
      left + pw / 2, y0 + 22, escape(panel.title));
  out += fmt::format(
      "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" "
      "fill=\"none\" stroke=\"#444\"/>\n",
      left, top, pw, ph);
  for (int k = 0; k <= 4; ++k) {
    const double fx = ax.lo + (ax.hi - ax.lo) * k / 4.0;
    const double fy = ay.lo + (ay.hi - ay.lo) * k / 4.0;
    const double gx = left + pw * k / 4.0;
    const double gy = top + ph * (1.0 - k / 4.0);
    out += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"#444\"/>"
        "<text x=\"{0:.1f}\" y=\"{3:.1f}\" font-size=\"10\" text-anchor=\"middle\">{4}</text>\n",
        gx, top + ph, top + ph + 4, top + ph + 16, ax.tick_label(fx));
    out += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"#444\"/>"
        "<text x=\"{3:.1f}\" y=\"{4:.1f}\" font-size=\"10\" text-anchor=\"end\">{5}</text>\n",
        left - 4, gy, left, left - 6, gy + 3, ay.tick_label(fy));
  }
  out += fmt::format(
      "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
      left + pw / 2, top + ph + 34, escape(panel.x_label));
  out += fmt::format(
      "<text x=\"{0:.1f}\" y=\"{1:.1f}\" font-size=\"11\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 {0:.1f} {1:.1f})\">{2}</text>\n",
      x0 + 14, top + ph / 2, escape(panel.y_label));

  for (std::size_t k = 0; k < panel.series.size(); ++k) {
    const auto& s = panel.series[k];
    const char* color = kColors[k % kColors.size()];
    std::string points;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!ax.usable(s.x[i]) || !ay.usable(s.y[i])) continue;
      points += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
    }
    out += fmt::format(
        "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n",
        color, s.dashed ? " stroke-dasharray=\"5,3\"" : "", points);
    out += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\" fill=\"{}\">{}</text>\n",
        left + 6, top + 14 + 12 * k, color, escape(s.label));
  }
  for (const auto& m : panel.markers) {
    if (!ax.usable(m.x) || !ay.usable(m.y)) continue;
    out += fmt::format(
        "<circle cx=\"{0:.2f}\" cy=\"{1:.2f}\" r=\"4\" fill=\"#000\"/>"
        "<text x=\"{2:.2f}\" y=\"{3:.2f}\" font-size=\"10\">{4}</text>\n",
        px(m.x), py(m.y), px(m.x) + 6, py(m.y) - 6, escape(m.label));
  }
}

}  // namespace

std::string render(const std::vector<Panel>& panels, const std::string& caption) {
  const double width = kPanelWidth * std::max<std::size_t>(panels.size(), 1);
  const double height = kPanelHeight + kCaption;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {1:.0f}\" font-family=\"sans-serif\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n"
      "<text x=\"8\" y=\"18\" font-size=\"11\">{2}</text>\n",
      width, height, escape(caption));
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(out, panels[i], kPanelWidth * i, kCaption);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace swgeo::svg
