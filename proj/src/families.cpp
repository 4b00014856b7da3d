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

#include "swgeo/families.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swgeo {
namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

void check_alpha(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
}

void check_t(double t) { require(t >= 0.0 && t <= 1.0, "t must lie in [0, 1]"); }

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

std::vector<double> embed(std::span<const double> v, int d) {
  require(v.size() == static_cast<std::size_t>(d) || v.size() == 3,
          "vector must have d (or 3) coordinates");
  std::vector<double> out(d, 0.0);
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// mu family

Measure1D mu_family(double alpha, double beta, double t) {
  check_alpha(alpha);
  require(beta >= -1.0 && beta <= 1.0, "beta must lie in [-1, 1]");
  check_t(t);
  const double outside_base = (1.0 - alpha) / 2.0;
  if (t == 1.0) {
    return Measure1D({{beta, alpha}}, {{-1.0, 1.0, outside_base}});
  }
  const double shrink = 1.0 - alpha * (1.0 - t);
  const double radius = alpha * (1.0 - t);
  const double center = beta * shrink;
  double lo = center - radius;
  double hi = center + radius;
  // |beta| shrink + radius <= 1 always; only rounding can push past +-1.
  require(lo >= -1.0 - 1e-12 && hi <= 1.0 + 1e-12,
          "mu_family: ball leaves [-1, 1]");
  lo = std::max(lo, -1.0);
  hi = std::min(hi, 1.0);
  const double outside = (1.0 - alpha) / (2.0 * shrink);
  const double inside = 1.0 / (2.0 * (1.0 - t));
  return Measure1D({}, {{-1.0, lo, outside}, {lo, hi, inside}, {hi, 1.0, outside}});
}

MeasureCurve mu_curve(double alpha, double beta) {
  check_alpha(alpha);
  require(beta >= -1.0 && beta <= 1.0, "beta must lie in [-1, 1]");
  return [alpha, beta](double t) { return mu_family(alpha, beta, t); };
}

double w_p_mu01(double alpha, double beta, double p) {
  check_alpha(alpha);
  require(beta >= -1.0 && beta <= 1.0, "beta must lie in [-1, 1]");
  require(p != kInfinity, "w_p_mu01: p = inf, use w_inf_mu01");
  require(p >= 1.0, "w_p_mu01: p must be >= 1");
  const double bracket =
      (std::pow(1.0 + beta, p + 1.0) + std::pow(1.0 - beta, p + 1.0)) /
      (2.0 * (p + 1.0));
  return alpha * std::pow(bracket, 1.0 / p);
}

double w_inf_mu01(double alpha, double beta) {
  check_alpha(alpha);
  require(beta >= -1.0 && beta <= 1.0, "beta must lie in [-1, 1]");
  return alpha * (1.0 + std::abs(beta));
}

// ---------------------------------------------------------------------------
// Shell and circle mixtures

ShellMixture::ShellMixture(int dim, std::vector<ShellComponent> components)
    : dim_(dim) {
  require(dim >= 3, "ShellMixture: dimension must be >= 3");
  double total = 0.0;
  for (ShellComponent& c : components) {
    require(std::isfinite(c.weight) && c.weight >= 0.0,
            "ShellMixture: weights must be >= 0");
    require(std::isfinite(c.radius) && c.radius >= 0.0,
            "ShellMixture: radii must be >= 0");
    require(c.center.size() == static_cast<std::size_t>(dim),
            "ShellMixture: center has wrong dimension");
    for (double v : c.center) require(std::isfinite(v), "ShellMixture: bad center");
    if (c.weight == 0.0) continue;
    total += c.weight;
    components_.push_back(std::move(c));
  }
  require(std::abs(total - 1.0) <= kMassTolerance,
          "ShellMixture: weights must sum to 1");
}

bool ShellMixture::is_concentric() const {
  return std::all_of(components_.begin(), components_.end(),
                     [this](const ShellComponent& c) {
                       return c.center == components_.front().center;
                     });
}

CircleMixture::CircleMixture(std::vector<CircleComponent> components) {
  double total = 0.0;
  for (const CircleComponent& c : components) {
    require(std::isfinite(c.weight) && c.weight >= 0.0,
            "CircleMixture: weights must be >= 0");
    require(std::isfinite(c.radius) && c.radius >= 0.0,
            "CircleMixture: radii must be >= 0");
    if (c.weight == 0.0) continue;
    total += c.weight;
    components_.push_back(c);
  }
  require(std::abs(total - 1.0) <= kMassTolerance,
          "CircleMixture: weights must sum to 1");
}

bool CircleMixture::is_concentric() const {
  return std::all_of(components_.begin(), components_.end(),
                     [this](const CircleComponent& c) {
                       return c.center == components_.front().center;
                     });
}

ShellMasses shell_masses(double alpha, double t) {
  check_alpha(alpha);
  check_t(t);
  const double denom = 1.0 - alpha + alpha * t;
  const double inner = alpha * t / denom;
  return {1.0 - inner, inner};
}

ShellMixture nu_family(double alpha, std::span<const double> x, double t,
                       int d) {
  check_alpha(alpha);
  check_t(t);
  require(d >= 3, "nu_family: d must be >= 3");
  std::vector<double> center = embed(x, d);
  for (int i = 3; i < d; ++i) {
    require(center[i] == 0.0, "nu_family: x must lie in span{e1, e2, e3}");
  }
  require(std::sqrt(dot(center, center)) <= 1.0 + 1e-12,
          "nu_family: |x| must be <= 1");
  const ShellMasses masses = shell_masses(alpha, t);
  const double shrink = 1.0 - alpha * (1.0 - t);
  for (double& v : center) v *= shrink;
  return ShellMixture(
      d, {{masses.outer, 1.0, std::vector<double>(d, 0.0)},
          {masses.inner, alpha * (1.0 - t), std::move(center)}});
}

ShellCurve nu_curve(double alpha, std::span<const double> x, int d) {
  std::vector<double> xs = embed(x, d);
  nu_family(alpha, xs, 0.0, d);  // validates once up front
  return [alpha, xs, d](double t) { return nu_family(alpha, xs, t, d); };
}

ShellCurve transformed_nu_curve(double alpha, std::span<const double> x, int d,
                                double a, std::span<const double> y,
                                std::span<const double> z) {
  std::vector<double> xs = embed(x, d);
  std::vector<double> ys = embed(y, d);
  std::vector<double> zs = embed(z, d);
  nu_family(alpha, xs, 0.0, d);
  return [=](double t) {
    std::vector<double> shift(d);
    for (int i = 0; i < d; ++i) shift[i] = t * ys[i] + zs[i];
    return dilate(translate(nu_family(alpha, xs, t, d), shift), a);
  };
}

double s_of_theta(std::span<const double> theta) {
  require(theta.size() >= 3, "s_of_theta: need at least 3 coordinates");
  const double norm = std::sqrt(dot(theta, theta));
  require(std::abs(norm - 1.0) <= 1e-12, "s_of_theta: theta is not a unit vector");
  if (theta.size() == 3) return 1.0;
  const double s2 =
      theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2];
  return std::min(1.0, std::sqrt(s2));
}

Measure1D radon_project(const ShellMixture& sm, std::span<const double> theta) {
  require(theta.size() == static_cast<std::size_t>(sm.dim()),
          "radon_project: direction has wrong dimension");
  const double s = s_of_theta(theta);
  MeasureBuilder builder;
  for (const ShellComponent& c : sm.components()) {
    const double mid = dot(theta, c.center);
    const double half = c.radius * s;
    if (half == 0.0) {
      builder.add_atom(mid, c.weight);
    } else {
      builder.add_uniform(mid - half, mid + half, c.weight);
    }
  }
  return builder.build();
}

ShellMixture dilate(const ShellMixture& sm, double a) {
  require(std::isfinite(a), "dilate: non-finite factor");
  std::vector<ShellComponent> out = sm.components();
  for (ShellComponent& c : out) {
    c.radius *= std::abs(a);
    for (double& v : c.center) v *= a;
  }
  return ShellMixture(sm.dim(), std::move(out));
}

ShellMixture translate(const ShellMixture& sm, std::span<const double> v) {
  require(v.size() == static_cast<std::size_t>(sm.dim()),
          "translate: vector has wrong dimension");
  std::vector<ShellComponent> out = sm.components();
  for (ShellComponent& c : out) {
    for (std::size_t i = 0; i < v.size(); ++i) c.center[i] += v[i];
  }
  return ShellMixture(sm.dim(), std::move(out));
}

CircleMixture circle_family(double t) {
  check_t(t);
  return CircleMixture({{t, 0.0, {0.0, 0.0}}, {1.0 - t, 1.0, {0.0, 0.0}}});
}

CircleCurve circle_curve() {
  return [](double t) { return circle_family(t); };
}

Measure1D circle_project(const CircleMixture& cm,
                         std::span<const double> theta) {
  require(theta.size() == 2, "circle_project: direction must lie in R^2");
  require(std::abs(std::hypot(theta[0], theta[1]) - 1.0) <= 1e-12,
          "circle_project: theta is not a unit vector");
  MeasureBuilder builder;
  for (const CircleComponent& c : cm.components()) {
    const double mid = theta[0] * c.center[0] + theta[1] * c.center[1];
    builder.add_arcsine(mid, c.radius, c.weight);
  }
  return builder.build();
}

// ---------------------------------------------------------------------------
// Text form

ShellMixture parse_shell_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  int dim = -1;
  std::vector<ShellComponent> components;
  auto fail = [&line_number](const std::string& what) {
    throw std::runtime_error("shell text line " + std::to_string(line_number) +
                             ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword) || keyword.front() == '#') continue;
    if (keyword != "shell") fail("unknown record '" + keyword + "'");
    std::vector<double> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        fail("cannot parse number '" + token + "'");
      }
      if (used != token.size()) fail("cannot parse number '" + token + "'");
      values.push_back(v);
    }
    if (values.size() < 5) fail("expected 'shell <weight> <radius> <c1> ... <cd>' with d >= 3");
    const int d = static_cast<int>(values.size()) - 2;
    if (dim >= 0 && d != dim) fail("dimension differs from earlier lines");
    dim = d;
    components.push_back(
        {values[0], values[1], std::vector<double>(values.begin() + 2, values.end())});
  }
  if (dim < 0) throw std::runtime_error("shell text: no components");
  try {
    return ShellMixture(dim, std::move(components));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("shell text: ") + e.what());
  }
}

ShellMixture read_shell_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open shell file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_shell_text(buffer.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_shell_text(std::ostream& os, const ShellMixture& sm) {
  const auto old_precision = os.precision(17);
  for (const ShellComponent& c : sm.components()) {
    os << "shell " << c.weight << ' ' << c.radius;
    for (double v : c.center) os << ' ' << v;
    os << '\n';
  }
  os.precision(old_precision);
}

}  // namespace swgeo
