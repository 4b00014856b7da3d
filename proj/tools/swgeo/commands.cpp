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

#include "swgeo/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "swgeo/config.hpp"
#include "swgeo/measure1d.hpp"
#include "swgeo/parallel.hpp"
#include "swgeo/sliced.hpp"
#include "swgeo/svg.hpp"
#include "swgeo/transport1d.hpp"

namespace swgeo::cli {
namespace {

using Cell = std::variant<double, std::string>;

struct Table {
  std::string command;
  std::string flags;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
  std::vector<svg::Panel> panels;
  int exit_code = 0;
};

std::string real(double v) { return fmt::format("{:.17g}", v); }

// Canonical "--name=value" list echoed in the CSV header.
class FlagList {
 public:
  FlagList& add(const std::string& name, double v) {
    return add_text(name, fmt::format("{}", v));
  }
  FlagList& add(const std::string& name, const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + fmt::format("{}", v[i]);
    }
    return add_text(name, s);
  }
  FlagList& add(const std::string& name, const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return add_text(name, s);
  }
  FlagList& add_text(const std::string& name, const std::string& v) {
    const bool quote = v.find(' ') != std::string::npos;
    text_ += (text_.empty() ? "" : " ") + std::string("--") + name + "=" +
             (quote ? "'" + v + "'" : v);
    return *this;
  }
  FlagList& common(const CommonOptions& c, bool directions) {
    add_text("format", c.format);
    if (directions) {
      add_text("seed", std::to_string(c.seed));
      add_text("dirs", std::to_string(c.dirs));
      add_text("quad", c.quad);
    }
    return *this;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

Output finish(const Table& table, const CommonOptions& common) {
  const std::string title =
      fmt::format("swgeo {} {} {}", table.command, kVersion, table.flags);
  if (common.format == "svg") {
    if (table.panels.empty()) {
      throw std::invalid_argument("--format svg is not available for " +
                                  table.command);
    }
    return {svg::render(table.panels, title), table.exit_code};
  }
  if (common.format != "csv") {
    throw std::invalid_argument("--format must be csv or svg");
  }
  std::string out = "# " + title + "\n";
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out += (i ? "," : "") + table.header[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      if (const auto* v = std::get_if<double>(&row[i])) {
        out += real(*v);
      } else {
        out += std::get<std::string>(row[i]);
      }
    }
    out += "\n";
  }
  for (const auto& note : table.notes) out += "# " + note + "\n";
  return {out, table.exit_code};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_alpha(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "--alpha must lie in (0, 1)");
}

std::vector<double> default_decay_grid() {
  std::vector<double> t;
  for (int k = 0; k <= 12; ++k) t.push_back(std::pow(10.0, -4.0 + k / 4.0));
  t.push_back(0.25);
  t.push_back(0.5);
  t.push_back(1.0);
  return t;
}

const std::array<double, 3> kOrigin = {0.0, 0.0, 0.0};

// Map s(theta) -> W_p along theta is increasing for the centered family, so
// the supremum over the sphere sits at e1.
double sup_slice_distance(const ShellMixture& a, const ShellMixture& b,
                          double p) {
  std::vector<double> e1(a.dim(), 0.0);
  e1[0] = 1.0;
  return wasserstein(radon_project(a, e1), radon_project(b, e1), p);
}

constexpr double kFitLo = 1e-4;
constexpr double kFitHi = 1e-1;
constexpr double kFitTolerance = 0.01;

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// Parsed geodesic-check family.
struct FamilySpec {
  std::string kind;
  double alpha = 0.5;
  double beta = 0.2;
  int d = 3;
  double a = 1.0;
  std::vector<double> x = {0.0, 0.0, 0.0};
  std::vector<double> y = {0.0, 0.0, 0.0};
  std::vector<double> z = {0.0, 0.0, 0.0};
};

FamilySpec parse_family(const std::string& text) {
  std::istringstream in(text);
  FamilySpec spec;
  in >> spec.kind;
  if (spec.kind != "mu" && spec.kind != "nu" && spec.kind != "control") {
    throw std::invalid_argument("unparseable family spec '" + text +
                                "': kind must be mu, nu or control");
  }
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("unparseable family spec '" + text +
                                  "': expected key=value, got '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "alpha" && spec.kind != "control") {
        spec.alpha = parse_real(value);
      } else if (key == "beta" && spec.kind == "mu") {
        spec.beta = parse_real(value);
      } else if (key == "d" && spec.kind == "nu") {
        spec.d = parse_int_list(value).at(0);
      } else if (key == "a" && spec.kind == "nu") {
        spec.a = parse_real(value);
      } else if (key == "x" && spec.kind == "nu") {
        spec.x = parse_grid(value);
      } else if (key == "y" && spec.kind == "nu") {
        spec.y = parse_grid(value);
      } else if (key == "z" && spec.kind == "nu") {
        spec.z = parse_grid(value);
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("unparseable family spec '" + text +
                                  "' at '" + token + "': " + e.what());
    }
  }
  return spec;
}

std::vector<double> pad(std::vector<double> v, int d) {
  require(static_cast<int>(v.size()) <= d,
          "family vector has more coordinates than d");
  v.resize(d, 0.0);
  return v;
}

Measure1D control_measure(double t) {
  return MeasureBuilder().add_uniform(-1.0, 1.0, 1.0 - t).add_atom(0.0, t).build();
}

}  // namespace

DirectionRule direction_rule(const CommonOptions& common) {
  require(common.dirs >= 1, "--dirs must be >= 1");
  if (common.quad == "mc") return MonteCarloRule{common.dirs, common.seed};
  require(common.quad == "beta", "--quad must be beta or mc");
  return BetaQuadratureRule{common.dirs};
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y,
                     double lo, double hi) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] >= lo && x[i] <= hi && x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  require(lx.size() >= 2, "log_log_slope: need at least two points in range");
  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  require(sxx > 0.0, "log_log_slope: points share one abscissa");
  return sxy / sxx;
}

Output run_density(const DensityOptions& opts, const CommonOptions& common) {
  check_alpha(opts.alpha);
  Table table;
  table.command = "density";
  table.flags = FlagList()
                    .add("alpha", opts.alpha)
                    .add("beta", opts.beta)
                    .add("t", opts.t)
                    .common(common, false)
                    .str();
  table.header = {"t", "kind", "lo", "hi", "value"};
  for (double t : opts.t) {
    const Measure1D m = mu_family(opts.alpha, opts.beta, t);
    svg::Panel panel;
    panel.title = fmt::format("alpha={} beta={} t={}", opts.alpha, opts.beta, t);
    panel.x_label = "x";
    panel.y_label = "density";
    svg::Series series{.label = "density", .x = {}, .y = {}};
    for (const auto& piece : m.pieces()) {
      table.rows.push_back({t, std::string("piece"), piece.lo, piece.hi,
                            piece.density});
      series.x.insert(series.x.end(), {piece.lo, piece.hi});
      series.y.insert(series.y.end(), {piece.density, piece.density});
    }
    for (const auto& atom : m.atoms()) {
      table.rows.push_back({t, std::string("atom"), atom.position,
                            atom.position, atom.mass});
      panel.markers.push_back(
          {atom.position, atom.mass, fmt::format("atom {}", atom.mass)});
    }
    panel.series.push_back(std::move(series));
    table.panels.push_back(std::move(panel));
  }
  return finish(table, common);
}

Output run_nonequiv(const NonequivOptions& opts, const CommonOptions& common) {
  check_alpha(opts.alpha);
  require(opts.p > 1.0,
          "nonequiv: p must satisfy 1 < p <= inf; the ratio stays bounded "
          "at p = 1, where the non-equivalence result does not apply");
  require(opts.q >= 1.0, "--q must be >= 1");
  require(opts.d >= 3, "--d must be >= 3");
  const std::vector<double> grid = opts.t.empty() ? default_decay_grid() : opts.t;
  for (double t : grid) require(t > 0.0 && t <= 1.0, "--t values must lie in (0, 1]");

  const DirectionSet dirs = make_directions(opts.d, direction_rule(common));
  const ShellMixture start = nu_family(opts.alpha, kOrigin, 0.0, opts.d);
  std::vector<double> w(grid.size()), sw(grid.size());
  parallel_for(grid.size(), common.threads, [&](std::size_t i) {
    const ShellMixture nu = nu_family(opts.alpha, kOrigin, grid[i], opts.d);
    w[i] = w_p_radial(nu, start, opts.p);
    sw[i] = std::isinf(opts.q) ? sup_slice_distance(nu, start, opts.p)
                               : sw_pq(nu, start, opts.p, opts.q, dirs);
  });

  Table table;
  table.command = "nonequiv";
  table.flags = FlagList()
                    .add("alpha", opts.alpha)
                    .add("p", opts.p)
                    .add("q", opts.q)
                    .add("d", opts.d)
                    .add("t", grid)
                    .common(common, true)
                    .str();
  table.header = {"t", "w_p", "sw_pq", "ratio"};
  std::vector<double> ratio(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ratio[i] = w[i] / sw[i];
    table.rows.push_back({grid[i], w[i], sw[i], ratio[i]});
  }

  const double target = std::isinf(opts.p) ? -1.0 : 1.0 / opts.p - 1.0;
  const auto fit_points = std::count_if(grid.begin(), grid.end(), [](double t) {
    return t >= kFitLo && t <= kFitHi;
  });
  if (fit_points >= 2) {
    const double slope = log_log_slope(grid, ratio, kFitLo, kFitHi);
    const double deviation = std::abs(slope - target);
    bool ok;
    if (std::isinf(opts.p)) {
      // W_inf never drops below 1 - alpha, so the ratio must blow up.
      ok = std::all_of(w.begin(), w.end(),
                       [&](double v) { return v >= 1.0 - opts.alpha; }) &&
           slope < 0.0;
      table.notes.push_back(fmt::format("w_inf_lower_bound={}", real(1.0 - opts.alpha)));
    } else {
      ok = deviation <= kFitTolerance;
    }
    table.notes.push_back(fmt::format(
        "fit t in [{},{}] slope={} target={} deviation={} status={}", kFitLo,
        kFitHi, real(slope), real(target), real(deviation), pass_fail(ok)));
    if (!ok) table.exit_code = 1;
  } else {
    table.notes.push_back("fit skipped: fewer than two t values in [1e-4,1e-1]");
  }

  svg::Panel panel;
  panel.title = fmt::format("alpha={} p={} q={} d={}", opts.alpha, opts.p, opts.q, opts.d);
  panel.x_label = "t";
  panel.y_label = "value";
  panel.log_x = panel.log_y = true;
  panel.series.push_back({"W_p", grid, w});
  panel.series.push_back({"SW_pq", grid, sw});
  panel.series.push_back({"ratio", grid, ratio});
  table.panels.push_back(std::move(panel));
  return finish(table, common);
}

Output run_holder(const HolderOptions& opts, const CommonOptions& common) {
  check_alpha(opts.alpha);
  require(opts.p > 1.0 && std::isfinite(opts.p),
          "holder: p must be finite and > 1");
  require(opts.d >= 3, "--d must be >= 3");
  const std::vector<double> grid = opts.t.empty() ? default_decay_grid() : opts.t;
  for (double t : grid) require(t > 0.0 && t <= 1.0, "--t values must lie in (0, 1]");

  const ShellMixture start = nu_family(opts.alpha, kOrigin, 0.0, opts.d);
  std::vector<double> w(grid.size());
  parallel_for(grid.size(), common.threads, [&](std::size_t i) {
    w[i] = w_p_radial(nu_family(opts.alpha, kOrigin, grid[i], opts.d), start,
                      opts.p);
  });

  Table table;
  table.command = "holder";
  table.flags = FlagList()
                    .add("alpha", opts.alpha)
                    .add("p", opts.p)
                    .add("d", opts.d)
                    .add("t", grid)
                    .common(common, false)
                    .str();
  table.header = {"t", "w_p"};
  for (std::size_t i = 0; i < grid.size(); ++i) table.rows.push_back({grid[i], w[i]});

  const double target = 1.0 / opts.p;
  const auto fit_points = std::count_if(grid.begin(), grid.end(), [](double t) {
    return t >= kFitLo && t <= kFitHi;
  });
  if (fit_points >= 2) {
    const double exponent = log_log_slope(grid, w, kFitLo, kFitHi);
    const double deviation = std::abs(exponent - target);
    const bool ok = deviation <= kFitTolerance;
    table.notes.push_back(fmt::format(
        "fit t in [{},{}] exponent={} target={} deviation={} status={}", kFitLo,
        kFitHi, real(exponent), real(target), real(deviation), pass_fail(ok)));
    if (!ok) table.exit_code = 1;
  } else {
    table.notes.push_back("fit skipped: fewer than two t values in [1e-4,1e-1]");
  }

  svg::Panel panel;
  panel.title = fmt::format("alpha={} p={} d={}", opts.alpha, opts.p, opts.d);
  panel.x_label = "t";
  panel.y_label = "W_p(nu_t, nu_0)";
  panel.log_x = panel.log_y = true;
  panel.series.push_back({"W_p", grid, w});
  table.panels.push_back(std::move(panel));
  return finish(table, common);
}

Output run_hopping(const HoppingOptions& opts, const CommonOptions& common) {
  check_alpha(opts.alpha);
  Table table;
  table.command = "hopping";
  table.flags = FlagList()
                    .add("alpha", opts.alpha)
                    .add("t", opts.t)
                    .common(common, false)
                    .str();
  table.header = {"t", "outer_mass", "inner_mass", "inner_radius"};
  std::vector<double> outer, inner, radius;
  double worst = 0.0;
  for (double t : opts.t) {
    const ShellMasses m = shell_masses(opts.alpha, t);
    const double r = opts.alpha * (1.0 - t);
    table.rows.push_back({t, m.outer, m.inner, r});
    outer.push_back(m.outer);
    inner.push_back(m.inner);
    radius.push_back(r);
    worst = std::max(worst, std::abs(m.outer + m.inner - 1.0));
  }
  table.notes.push_back("max_mass_defect=" + real(worst));

  svg::Panel panel;
  panel.title = fmt::format("alpha={}", opts.alpha);
  panel.x_label = "t";
  panel.y_label = "mass / radius";
  panel.series.push_back({"outer mass", opts.t, outer});
  panel.series.push_back({"inner mass", opts.t, inner});
  panel.series.push_back({"inner radius", opts.t, radius, true});
  table.panels.push_back(std::move(panel));
  return finish(table, common);
}

Output run_circle(const CircleOptions& opts, const CommonOptions& common) {
  require(opts.q >= 1.0, "--q must be >= 1");
  for (double t : opts.t) require(t > 0.0 && t <= 1.0, "--t values must lie in (0, 1]");
  require(common.dirs >= 1, "--dirs must be >= 1");
  DirectionRule rule = EqualAngleRule{common.dirs};
  if (common.quad == "mc") {
    rule = MonteCarloRule{common.dirs, common.seed};
  } else {
    require(common.quad == "beta", "--quad must be beta or mc");
  }
  const DirectionSet dirs = make_directions(2, rule);
  const CircleMixture start = circle_family(0.0);

  std::vector<double> w(opts.t.size()), sw(opts.t.size());
  parallel_for(opts.t.size(), common.threads, [&](std::size_t i) {
    const CircleMixture mu = circle_family(opts.t[i]);
    w[i] = w_p_radial(mu, start, kInfinity);
    sw[i] = sw_pq(mu, start, kInfinity, opts.q, dirs);
  });

  Table table;
  table.command = "circle";
  table.flags = FlagList().add("q", opts.q).add("t", opts.t).common(common, true).str();
  table.header = {"t",           "w_inf",           "sw_inf_q",
                  "ratio",       "sin_pi_t_half",   "two_sin_t_over_pi",
                  "closest"};
  std::vector<double> ref_a, ref_b;
  int votes_a = 0;
  for (std::size_t i = 0; i < opts.t.size(); ++i) {
    const double t = opts.t[i];
    const double a = std::sin(std::numbers::pi * t / 2.0);
    const double b = 2.0 * std::sin(t) / std::numbers::pi;
    const bool first = std::abs(sw[i] - a) <= std::abs(sw[i] - b);
    votes_a += first ? 1 : 0;
    ref_a.push_back(a);
    ref_b.push_back(b);
    table.rows.push_back({t, w[i], sw[i], w[i] / sw[i], a, b,
                          std::string(first ? "sin_pi_t_half" : "two_sin_t_over_pi")});
  }
  table.notes.push_back(std::string("closest_overall=") +
                        (2 * votes_a >= static_cast<int>(opts.t.size())
                             ? "sin_pi_t_half"
                             : "two_sin_t_over_pi"));

  svg::Panel panel;
  panel.title = fmt::format("circle family, p=inf, q={}", opts.q);
  panel.x_label = "t";
  panel.y_label = "SW_inf,q(mu_t, mu_0)";
  panel.series.push_back({"computed", opts.t, sw});
  panel.series.push_back({"sin(pi t/2)", opts.t, ref_a, true});
  panel.series.push_back({"2 sin(t)/pi", opts.t, ref_b, true});
  panel.series.push_back({"W_inf", opts.t, w});
  table.panels.push_back(std::move(panel));
  return finish(table, common);
}

Output run_cdq(const CdqOptions& opts, const CommonOptions& common) {
  require(common.dirs >= 1, "--dirs must be >= 1");
  require(opts.samples >= 2, "--samples must be >= 2");
  for (int d : opts.d) require(d >= 3, "--d values must be >= 3");
  for (double q : opts.q) require(q >= 1.0, "--q values must be >= 1");

  struct Cell4 {
    double quad, mc, se;
  };
  const std::size_t nq = opts.q.size();
  std::vector<Cell4> cells(opts.d.size() * nq);
  parallel_for(cells.size(), common.threads, [&](std::size_t k) {
    const int d = opts.d[k / nq];
    const double q = opts.q[k % nq];
    const MonteCarloEstimate mc =
        c_dq_monte_carlo(d, q, opts.samples, common.seed);
    cells[k] = {c_dq(d, q, BetaQuadratureRule{common.dirs}), mc.value,
                mc.standard_error};
  });

  Table table;
  table.command = "cdq";
  table.flags = FlagList()
                    .add("d", opts.d)
                    .add("q", opts.q)
                    .add_text("samples", std::to_string(opts.samples))
                    .add_text("format", common.format)
                    .add_text("seed", std::to_string(common.seed))
                    .add_text("dirs", std::to_string(common.dirs))
                    .str();
  table.header = {"d", "q", "beta_quadrature", "monte_carlo", "mc_standard_error",
                  "discrepancy", "z_score"};
  double worst = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& c = cells[k];
    const double gap = std::abs(c.quad - c.mc);
    const double z = c.se > 0.0 ? gap / c.se : (gap == 0.0 ? 0.0 : kInfinity);
    worst = std::max(worst, z);
    table.rows.push_back({static_cast<double>(opts.d[k / nq]), opts.q[k % nq],
                          c.quad, c.mc, c.se, gap, z});
  }
  const bool ok = worst <= 4.0;
  table.notes.push_back(
      fmt::format("max_z_score={} limit=4 status={}", real(worst), pass_fail(ok)));
  if (!ok) table.exit_code = 1;

  for (double q : opts.q) {
    svg::Panel panel;
    panel.title = fmt::format("C_d,q for q={}", q);
    panel.x_label = "d";
    panel.y_label = "C_d,q";
    svg::Series quad{.label = "beta quadrature", .x = {}, .y = {}};
    svg::Series mc{.label = "monte carlo", .x = {}, .y = {}, .dashed = true};
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (opts.q[k % nq] != q) continue;
      quad.x.push_back(opts.d[k / nq]);
      quad.y.push_back(cells[k].quad);
      mc.x.push_back(opts.d[k / nq]);
      mc.y.push_back(cells[k].mc);
    }
    panel.series = {quad, mc};
    table.panels.push_back(std::move(panel));
  }
  return finish(table, common);
}

Output run_geodesic_check(const GeodesicCheckOptions& opts,
                          const CommonOptions& common) {
  const FamilySpec spec = parse_family(opts.family);
  require(opts.p >= 1.0, "--p must be >= 1");
  require(opts.q >= 1.0, "--q must be >= 1");
  require(opts.tolerance >= 0.0, "--tolerance must be >= 0");
  const auto zero = std::find(opts.grid.begin(), opts.grid.end(), 0.0);
  const auto one = std::find(opts.grid.begin(), opts.grid.end(), 1.0);
  require(zero != opts.grid.end() && one != opts.grid.end(),
          "--grid must contain 0 and 1");

  std::vector<double> from_start(opts.grid.size());
  double total = 0.0;
  double deviation = 0.0;
  if (spec.kind == "nu") {
    const auto x = pad(spec.x, spec.d);
    const ShellCurve curve = transformed_nu_curve(
        spec.alpha, x, spec.d, spec.a, pad(spec.y, spec.d), pad(spec.z, spec.d));
    const DirectionSet dirs = make_directions(spec.d, direction_rule(common));
    deviation = sw_geodesic_deviation(curve, opts.p, opts.q, dirs, opts.grid,
                                      common.threads);
    const ShellMixture first = curve(0.0);
    total = sw_pq(first, curve(1.0), opts.p, opts.q, dirs, common.threads);
    for (std::size_t i = 0; i < opts.grid.size(); ++i) {
      from_start[i] = sw_pq(first, curve(opts.grid[i]), opts.p, opts.q, dirs,
                            common.threads);
    }
  } else {
    const MeasureCurve curve =
        spec.kind == "mu" ? mu_curve(spec.alpha, spec.beta)
                          : MeasureCurve([](double t) { return control_measure(t); });
    deviation = geodesic_deviation(curve, opts.p, opts.grid);
    const Measure1D first = curve(0.0);
    total = wasserstein(first, curve(1.0), opts.p);
    parallel_for(opts.grid.size(), common.threads, [&](std::size_t i) {
      from_start[i] = wasserstein(first, curve(opts.grid[i]), opts.p);
    });
  }

  Table table;
  table.command = "geodesic-check";
  FlagList flags;
  flags.add_text("family", opts.family)
      .add("p", opts.p)
      .add("grid", opts.grid)
      .add("tolerance", opts.tolerance);
  if (spec.kind == "nu") {
    flags.add("q", opts.q).common(common, true);
  } else {
    flags.common(common, false);
  }
  table.flags = flags.str();
  table.header = {"t", "distance_from_start", "constant_speed", "abs_error"};
  std::vector<double> linear(opts.grid.size());
  for (std::size_t i = 0; i < opts.grid.size(); ++i) {
    linear[i] = opts.grid[i] * total;
    table.rows.push_back({opts.grid[i], from_start[i], linear[i],
                          std::abs(from_start[i] - linear[i])});
  }
  const bool ok = deviation <= opts.tolerance;
  table.notes.push_back(fmt::format("max_pair_deviation={} tolerance={} status={}",
                                    real(deviation), real(opts.tolerance),
                                    pass_fail(ok)));
  if (!ok) table.exit_code = 1;

  svg::Panel panel;
  panel.title = opts.family;
  panel.x_label = "t";
  panel.y_label = "distance from t=0";
  panel.series.push_back({"computed", opts.grid, from_start});
  panel.series.push_back({"t * total", opts.grid, linear, true});
  table.panels.push_back(std::move(panel));
  return finish(table, common);
}

Output run_distance1d(const Distance1dOptions& opts,
                      const CommonOptions& common) {
  require(opts.p >= 1.0, "--p must be >= 1");
  const Measure1D a = read_measure_file(opts.measure_a);
  const Measure1D b = read_measure_file(opts.measure_b);
  Table table;
  table.command = "distance1d";
  table.flags = FlagList()
                    .add_text("measure-file", opts.measure_a + "," + opts.measure_b)
                    .add("p", opts.p)
                    .common(common, false)
                    .str();
  table.header = {"p", "w_p"};
  table.rows.push_back({opts.p, wasserstein(a, b, opts.p)});
  return finish(table, common);
}

Output run_sliced(const SlicedOptions& opts, const CommonOptions& common) {
  require(opts.p >= 1.0, "--p must be >= 1");
  require(opts.q >= 1.0, "--q must be >= 1");
  const ShellMixture a = read_shell_file(opts.shell_a);
  const ShellMixture b = read_shell_file(opts.shell_b);
  require(a.dim() == b.dim(), "shell files have different dimensions");
  const DirectionSet dirs = make_directions(a.dim(), direction_rule(common));
  const double sw = sw_pq(a, b, opts.p, opts.q, dirs, common.threads);

  Table table;
  table.command = "sliced";
  table.flags = FlagList()
                    .add_text("shell-file", opts.shell_a + "," + opts.shell_b)
                    .add("p", opts.p)
                    .add("q", opts.q)
                    .common(common, true)
                    .str();
  table.header = {"d", "p", "q", "sw_pq", "w_p_radial"};
  const bool shared = a.is_concentric() && b.is_concentric() &&
                      a.components().front().center == b.components().front().center;
  Cell radial = std::string();
  if (shared) radial = w_p_radial(a, b, opts.p);
  table.rows.push_back({static_cast<double>(a.dim()), opts.p, opts.q, sw, radial});
  return finish(table, common);
}

}  // namespace swgeo::cli
