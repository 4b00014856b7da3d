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

#include "swgeo/transport1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "swgeo/quadrature.hpp"

namespace swgeo {
namespace {

void check_p(double p) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("Wasserstein exponent p must be >= 1");
  }
}

// Mean of |d|^p over [0, 1] where d runs affinely from d0 to d1.
double mean_abs_pow(double d0, double d1, double p) {
  const double a = std::abs(d0);
  const double b = std::abs(d1);
  if ((d0 <= 0.0 && d1 >= 0.0) || (d0 >= 0.0 && d1 <= 0.0)) {
    if (a + b == 0.0) return 0.0;
    // Sign change: the two sub-triangles integrate separately.
    return (std::pow(a, p + 1.0) + std::pow(b, p + 1.0)) /
           ((p + 1.0) * (a + b));
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double delta = (hi - lo) / lo;
  if (delta == 0.0) return std::pow(lo, p);
  // (hi^{p+1} - lo^{p+1}) / ((p+1)(hi - lo)) without cancellation.
  return std::pow(lo, p) * std::expm1((p + 1.0) * std::log1p(delta)) /
         ((p + 1.0) * delta);
}

std::vector<double> merged_kinks(const QuantileFn& a, const QuantileFn& b) {
  std::vector<double> s;
  std::merge(a.kinks().begin(), a.kinks().end(), b.kinks().begin(),
             b.kinks().end(), std::back_inserter(s));
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

double piecewise_inf(const QuantileFn& a, const QuantileFn& b);

// Adds the points where a - b changes sign inside each panel, found by a
// 64-point scan and bisection, so |a - b|^p is smooth on every panel.
std::vector<double> with_crossings(const QuantileFn& a, const QuantileFn& b,
                                   const std::vector<double>& kinks) {
  constexpr int kScan = 64;
  auto diff = [&](double s) { return a(s) - b(s); };
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < kinks.size(); ++k) {
    const double s0 = kinks[k];
    const double s1 = kinks[k + 1];
    out.push_back(s0);
    double prev_s = s0;
    double prev = diff(s0 + 1e-15 * (s1 - s0));
    for (int i = 1; i <= kScan; ++i) {
      const double s = i == kScan ? s1 : s0 + (s1 - s0) * i / kScan;
      const double cur = i == kScan ? a.left_limit(s1) - b.left_limit(s1) : diff(s);
      if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
        double lo = prev_s, hi = s;
        for (int it = 0; it < 60 && lo < hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          if ((diff(mid) < 0.0) == (prev < 0.0)) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        const double root = 0.5 * (lo + hi);
        if (root > out.back() && root < s1) out.push_back(root);
      }
      if (cur != 0.0) {
        prev = cur;
        prev_s = s;
      }
    }
  }
  out.push_back(kinks.back());
  return out;
}


// Close to the largest |a - b|, so (|a - b| / scale)^p stays representable
// for large p. Exact for piecewise inputs; a 1000-point scan otherwise.
double displacement_scale(const QuantileFn& a, const QuantileFn& b) {
  double worst = piecewise_inf(a, b);
  if (a.is_piecewise() && b.is_piecewise()) return worst;
  for (int i = 0; i <= 1000; ++i) {
    const double s = i / 1000.0;
    worst = std::max(worst, std::abs(a(s) - b(s)));
  }
  return worst;
}

double piecewise_inf(const QuantileFn& a, const QuantileFn& b) {
  double worst = 0.0;
  for (double s : merged_kinks(a, b)) {
    worst = std::max(worst, std::abs(a(s) - b(s)));
    worst = std::max(worst, std::abs(a.left_limit(s) - b.left_limit(s)));
  }
  return worst;
}

double analytic_inf(const QuantileFn& a, const QuantileFn& b) {
  auto gap = [&](double s) { return std::abs(a(s) - b(s)); };
  double worst = 0.0;
  for (double s : merged_kinks(a, b)) {
    worst = std::max(worst, gap(s));
    worst = std::max(worst, std::abs(a.left_limit(s) - b.left_limit(s)));
  }
  constexpr int kGrid = 10000;
  int best = 0;
  double best_value = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double v = gap(static_cast<double>(i) / kGrid);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  worst = std::max(worst, best_value);

  // Golden-section search for the maximum on the bracketing grid cells.
  double lo = static_cast<double>(std::max(best - 1, 0)) / kGrid;
  double hi = static_cast<double>(std::min(best + 1, kGrid)) / kGrid;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = gap(x1);
  double f2 = gap(x2);
  while (hi - lo > 1e-10) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = gap(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = gap(x2);
    }
  }
  return std::max({worst, f1, f2});
}

}  // namespace

double quantile_distance(const QuantileFn& a, const QuantileFn& b, double p) {
  if (p == kInfinity) {
    return (a.is_piecewise() && b.is_piecewise()) ? piecewise_inf(a, b)
                                                  : analytic_inf(a, b);
  }
  check_p(p);
  const double scale = displacement_scale(a, b);
  if (scale == 0.0) return 0.0;
  const std::vector<double> kinks = merged_kinks(a, b);
  double integral = 0.0;
  if (a.is_piecewise() && b.is_piecewise()) {
    for (std::size_t k = 0; k + 1 < kinks.size(); ++k) {
      const double s0 = kinks[k];
      const double s1 = kinks[k + 1];
      const double d0 = (a(s0) - b(s0)) / scale;
      const double d1 = (a.left_limit(s1) - b.left_limit(s1)) / scale;
      integral += (s1 - s0) * mean_abs_pow(d0, d1, p);
    }
  } else {
    const auto result = integrate_panels(
        [&](double s) { return std::pow(std::abs(a(s) - b(s)) / scale, p); },
        with_crossings(a, b, kinks));
    integral = result.value;
  }
  return scale * std::pow(std::max(integral, 0.0), 1.0 / p);
}

double wasserstein_p(const Measure1D& mu, const Measure1D& nu, double p) {
  check_p(p);
  if (p == kInfinity) {
    throw std::invalid_argument("wasserstein_p: use wasserstein_inf for p = inf");
  }
  return quantile_distance(mu.quantile(), nu.quantile(), p);
}

double wasserstein_inf(const Measure1D& mu, const Measure1D& nu) {
  return quantile_distance(mu.quantile(), nu.quantile(), kInfinity);
}

double wasserstein(const Measure1D& mu, const Measure1D& nu, double p) {
  return p == kInfinity ? wasserstein_inf(mu, nu) : wasserstein_p(mu, nu, p);
}

PiecewiseLinearMap optimal_map(const Measure1D& mu, const Measure1D& nu) {
  if (!mu.is_piecewise() || !nu.is_piecewise()) {
    throw std::invalid_argument(
        "optimal_map: both measures must be discrete mixtures");
  }
  if (mu.has_atoms()) {
    throw std::invalid_argument(
        "optimal_map: source measure has atoms; the monotone rearrangement "
        "is only a transport map for atomless sources");
  }
  const QuantileFn q = nu.quantile();
  const std::vector<double>& kinks = q.kinks();
  const std::vector<DensityPiece>& pieces = mu.pieces();

  std::vector<MapPoint> points;
  auto push = [&points](double x, double y) {
    if (points.empty() || points.back().x != x || points.back().y != y) {
      points.push_back({x, y});
    }
  };

  double s_start = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double x_a = pieces[i].lo;
    const double x_b = pieces[i].hi;
    const double s_a = s_start;
    const double s_b =
        (i + 1 == pieces.size()) ? 1.0 : std::min(1.0, s_a + pieces[i].mass());
    s_start = s_b;

    std::vector<double> events{s_a};
    for (auto it = std::upper_bound(kinks.begin(), kinks.end(), s_a);
         it != kinks.end() && *it < s_b; ++it) {
      events.push_back(*it);
    }
    events.push_back(s_b);

    for (double s : events) {
      double x;
      if (s == s_a) {
        x = x_a;
      } else if (s == s_b) {
        x = x_b;
      } else {
        x = x_a + (s - s_a) / (s_b - s_a) * (x_b - x_a);
      }
      push(x, q.left_limit(s));
      push(x, q(s));
    }
  }
  return PiecewiseLinearMap(std::move(points), 0.0, 0.0);
}

Measure1D interpolate(const Measure1D& mu, const Measure1D& nu,
                      double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("interpolate: lambda must lie in [0, 1]");
  }
  const PiecewiseLinearMap map = optimal_map(mu, nu);
  return pushforward_pwl(mu, map.blend_with_identity(lambda));
}

double geodesic_deviation(const MeasureCurve& curve, double p,
                          std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("geodesic_deviation: empty grid");
  bool has_zero = false;
  bool has_one = false;
  for (double t : grid) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::invalid_argument("geodesic_deviation: grid outside [0, 1]");
    }
    has_zero = has_zero || t == 0.0;
    has_one = has_one || t == 1.0;
  }
  if (!has_zero || !has_one) {
    throw std::invalid_argument("geodesic_deviation: grid must contain 0 and 1");
  }
  std::vector<QuantileFn> quantiles;
  quantiles.reserve(grid.size());
  for (double t : grid) quantiles.push_back(curve(t).quantile());
  const std::size_t i0 = std::find(grid.begin(), grid.end(), 0.0) - grid.begin();
  const std::size_t i1 = std::find(grid.begin(), grid.end(), 1.0) - grid.begin();
  const double base = quantile_distance(quantiles[i0], quantiles[i1], p);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double d = quantile_distance(quantiles[i], quantiles[j], p);
      worst = std::max(worst, std::abs(d - std::abs(grid[i] - grid[j]) * base));
    }
  }
  return worst;
}

}  // namespace swgeo
