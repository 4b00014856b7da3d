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

#ifndef SWGEO_FAMILIES_HPP_
#define SWGEO_FAMILIES_HPP_

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swgeo/measure1d.hpp"
#include "swgeo/transport1d.hpp"

namespace swgeo {

// ---------------------------------------------------------------------------
// One-dimensional geodesic family between the uniform law on [-1, 1] and
// (1 - alpha)/2 Lebesgue on [-1, 1] plus an atom alpha at beta.

// Density (1 - alpha) / (2 (1 - alpha (1 - t))) on [-1, 1] outside the ball
// of radius alpha (1 - t) around beta (1 - alpha (1 - t)), and 1 / (2 (1 - t))
// inside it. At t = 1 the ball collapses into the atom.
// Requires alpha in (0, 1), beta in [-1, 1], t in [0, 1].
Measure1D mu_family(double alpha, double beta, double t);

MeasureCurve mu_curve(double alpha, double beta);

// W_p between the endpoints of mu_family, finite p >= 1:
//   W_p^p = alpha^p ((1 + beta)^{p+1} + (1 - beta)^{p+1}) / (2 (p + 1)),
// i.e. alpha / (p + 1)^{1/p} when beta = 0.
double w_p_mu01(double alpha, double beta, double p);

// W_inf between the same endpoints: the largest displacement of the
// monotone map, alpha (1 + |beta|).
double w_inf_mu01(double alpha, double beta);

// ---------------------------------------------------------------------------
// Shell measures in R^d.

struct ShellComponent {
  double weight;
  double radius;  // 0 means a Dirac mass at the center
  std::vector<double> center;
};

// Weighted sum of normalized surface measures on 2-spheres lying in
// center + span{e1, e2, e3}. Zero-weight components are dropped.
class ShellMixture {
 public:
  // Throws std::invalid_argument unless dim >= 3, weights > 0 summing to 1
  // within kMassTolerance, radii >= 0 and every center has dim coordinates.
  ShellMixture(int dim, std::vector<ShellComponent> components);

  int dim() const { return dim_; }
  const std::vector<ShellComponent>& components() const { return components_; }

  // True when all components share one center.
  bool is_concentric() const;

 private:
  int dim_;
  std::vector<ShellComponent> components_;
};

struct CircleComponent {
  double weight;
  double radius;
  std::array<double, 2> center;
};

// Weighted sum of normalized arc-length measures on circles in R^2.
class CircleMixture {
 public:
  explicit CircleMixture(std::vector<CircleComponent> components);

  const std::vector<CircleComponent>& components() const { return components_; }
  bool is_concentric() const;

 private:
  std::vector<CircleComponent> components_;
};

using ShellCurve = std::function<ShellMixture(double)>;
using CircleCurve = std::function<CircleMixture(double)>;

struct ShellMasses {
  double outer;
  double inner;
};

// Mass on the unit shell and on the inner shell of radius alpha (1 - t):
// ((1 - alpha) / (1 - alpha + alpha t), alpha t / (1 - alpha + alpha t)).
// The support is the disconnected set of the two shells, and mass moves from
// the outer to the inner one as t grows.
ShellMasses shell_masses(double alpha, double t);

// Two-shell family from the unit shell (t = 0) to (1 - alpha) unit shell
// plus alpha delta_x (t = 1):
//   outer weight c1, radius 1, center 0;
//   inner weight c2, radius alpha (1 - t), center x (1 - alpha (1 - t)),
// with (c1, c2) = shell_masses(alpha, t). Every Radon projection is a scaled
// copy of mu_family, so the curve is a sliced Wasserstein geodesic.
//
// x has d coordinates (or 3, then zero-padded), lies in span{e1, e2, e3} and
// |x| <= 1.
ShellMixture nu_family(double alpha, std::span<const double> x, double t,
                       int d);

ShellCurve nu_curve(double alpha, std::span<const double> x, int d);

// t -> M^a_# (A^{t y + z}_# nu_family(alpha, x, t, d)).
ShellCurve transformed_nu_curve(double alpha, std::span<const double> x, int d,
                                double a, std::span<const double> y,
                                std::span<const double> z);

// Norm of the projection of a unit vector onto span{e1, e2, e3}; exactly 1
// when d = 3. Throws std::invalid_argument unless |theta| = 1 within 1e-12.
double s_of_theta(std::span<const double> theta);

// Pushforward under x -> theta . x. A shell (w, r, c) becomes w times the
// uniform law on [theta.c - r s(theta), theta.c + r s(theta)]; it becomes an
// atom when r s(theta) = 0.
Measure1D radon_project(const ShellMixture& sm, std::span<const double> theta);

// M^a: radii scale by |a|, centers by a.
ShellMixture dilate(const ShellMixture& sm, double a);
// A^v: centers shift by v.
ShellMixture translate(const ShellMixture& sm, std::span<const double> v);

// t delta_0 + (1 - t) uniform measure on the unit circle, t in [0, 1].
CircleMixture circle_family(double t);
CircleCurve circle_curve();

// Pushforward under x -> theta . x: a circle (w, r, c) becomes w times the
// arcsine law on (theta.c - r, theta.c + r); radius 0 gives an atom.
Measure1D circle_project(const CircleMixture& cm,
                         std::span<const double> theta);

// Text form, one component per line:
//   shell <weight> <radius> <c1> ... <cd>
// The dimension is the number of center coordinates and must agree across
// lines. '#' starts a comment line.
ShellMixture parse_shell_text(const std::string& text);
ShellMixture read_shell_file(const std::string& path);
void write_shell_text(std::ostream& os, const ShellMixture& sm);

}  // namespace swgeo

#endif  // SWGEO_FAMILIES_HPP_
