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

#include "oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace oracle {

double mu_family_cdf(double alpha, double beta, double t, double x) {
  if (x < -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (t == 1.0) {
    return (1.0 - alpha) / 2.0 * (x + 1.0) + (x >= beta ? alpha : 0.0);
  }
  const double r = alpha * (1.0 - t);
  const double c = beta * (1.0 - alpha * (1.0 - t));
  const double out = (1.0 - alpha) / (2.0 * (1.0 - alpha * (1.0 - t)));
  const double in = 1.0 / (2.0 * (1.0 - t));
  const double len_in = std::max(0.0, std::min(x, c + r) - (c - r));
  const double len_out = (x + 1.0) - len_in;
  return out * len_out + in * len_in;
}

double mu_family_quantile(double alpha, double beta, double t, double s) {
  double lo = -1.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mu_family_cdf(alpha, beta, t, mid) >= s) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<double> mu_family_points(double alpha, double beta, double t,
                                     std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = mu_family_quantile(alpha, beta, t, (k + 0.5) / n);
  }
  return out;
}

std::vector<double> circle_projection_points(double t, std::size_t n) {
  const auto zeros = static_cast<std::size_t>(std::llround(t * n));
  std::vector<double> out(zeros, 0.0);
  const std::size_t m = n - zeros;
  for (std::size_t k = 0; k < m; ++k) {
    out.push_back(std::cos(std::numbers::pi * (k + 0.5) / m));
  }
  return out;
}

std::vector<double> control_points(double t, std::size_t n) {
  const auto zeros = static_cast<std::size_t>(std::llround(t * n));
  std::vector<double> out(zeros, 0.0);
  const std::size_t m = n - zeros;
  for (std::size_t k = 0; k < m; ++k) out.push_back(-1.0 + 2.0 * (k + 0.5) / m);
  return out;
}

double sorted_matching_distance(std::vector<double> a, std::vector<double> b,
                                double p) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double gap = std::abs(a[i] - b[i]);
    if (std::isinf(p)) {
      acc = std::max(acc, gap);
    } else {
      acc += std::pow(gap, p);
    }
  }
  return std::isinf(p) ? acc : std::pow(acc / a.size(), 1.0 / p);
}

double beta_moment(int d, double q) {
  const double b = (d - 3) / 2.0;
  return std::beta((3.0 + q) / 2.0, b) / std::beta(1.5, b);
}

double c_dq(int d, double q) {
  if (d == 3) return 1.0;
  return std::pow(beta_moment(d, q), 1.0 / q);
}

std::vector<std::array<double, 3>> fibonacci_sphere(std::size_t n, double yaw,
                                                    double pitch, double roll) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double cy = std::cos(yaw), sy = std::sin(yaw);
  const double cp = std::cos(pitch), sp = std::sin(pitch);
  const double cr = std::cos(roll), sr = std::sin(roll);
  // R = Rz(yaw) Ry(pitch) Rx(roll)
  const double m[3][3] = {
      {cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr},
      {sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr},
      {-sp, cp * sr, cp * cr}};
  std::vector<std::array<double, 3>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(1.0 - z * z);
    const double phi = golden * i;
    const double v[3] = {r * std::cos(phi), r * std::sin(phi), z};
    for (int row = 0; row < 3; ++row) {
      out[i][row] = m[row][0] * v[0] + m[row][1] * v[1] + m[row][2] * v[2];
    }
  }
  return out;
}

double assignment_distance(const std::vector<std::array<double, 3>>& a,
                           const std::vector<std::array<double, 3>>& b,
                           double p) {
  const std::size_t n = a.size();
  auto cost = [&](std::size_t i, std::size_t j) {
    const double dx = a[i][0] - b[j][0];
    const double dy = a[i][1] - b[j][1];
    const double dz = a[i][2] - b[j][2];
    return std::pow(std::sqrt(dx * dx + dy * dy + dz * dz), p);
  };
  // Shortest augmenting paths with potentials; rows/cols are 1-based.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) total += cost(match[j] - 1, j - 1);
  return std::pow(total / n, 1.0 / p);
}

std::vector<double> sampled_shell_projection(double radius,
                                             const std::array<double, 3>& center,
                                             const std::array<double, 3>& theta,
                                             std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double g[3], norm = 0.0;
    do {
      for (double& x : g) x = normal(engine);
      norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    } while (norm == 0.0);
    double proj = 0.0;
    for (int k = 0; k < 3; ++k) proj += theta[k] * (center[k] + radius * g[k] / norm);
    out[i] = proj;
  }
  return out;
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    worst = std::max({worst, std::abs((i + 1) / n - f), std::abs(i / n - f)});
  }
  return worst;
}

}  // namespace oracle
