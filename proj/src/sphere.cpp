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

#include "swgeo/sphere.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "swgeo/families.hpp"
#include "swgeo/measure1d.hpp"
#include "swgeo/quadrature.hpp"
#include "swgeo/rng.hpp"

namespace swgeo {
namespace {

void check_cdq_args(int d, double q) {
  if (d < 3) throw std::invalid_argument("c_dq: d must be >= 3");
  if (!(q >= 1.0)) throw std::invalid_argument("c_dq: q must be >= 1");
}

}  // namespace

std::string describe(const DirectionRule& rule) {
  if (const auto* mc = std::get_if<MonteCarloRule>(&rule)) {
    return "mc(n=" + std::to_string(mc->n) + ",seed=" + std::to_string(mc->seed) + ")";
  }
  if (const auto* ea = std::get_if<EqualAngleRule>(&rule)) {
    return "angles(n=" + std::to_string(ea->n) + ")";
  }
  return "beta(n=" + std::to_string(std::get<BetaQuadratureRule>(rule).n) + ")";
}

DirectionSet::DirectionSet(int dim, std::vector<double> directions,
                           std::vector<double> weights,
                           DirectionRule provenance)
    : dim_(dim),
      directions_(std::move(directions)),
      weights_(std::move(weights)),
      provenance_(provenance) {
  if (dim_ < 1) throw std::invalid_argument("DirectionSet: dim must be >= 1");
  if (weights_.empty() || directions_.size() != weights_.size() * dim_) {
    throw std::invalid_argument("DirectionSet: size mismatch");
  }
  double total = 0.0;
  double carry = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0)) {
      throw std::invalid_argument("DirectionSet: weights must be positive");
    }
    const double y = weights_[i] - carry;
    const double next = total + y;
    carry = (next - total) - y;
    total = next;
    double norm2 = 0.0;
    for (double v : direction(i)) norm2 += v * v;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
      throw std::invalid_argument("DirectionSet: direction is not a unit vector");
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("DirectionSet: weights must sum to 1");
  }
}

DirectionSet mc_directions(int d, std::size_t n, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("mc_directions: d must be >= 1");
  if (n < 1) throw std::invalid_argument("mc_directions: n must be >= 1");
  Rng rng(seed);
  std::vector<double> dirs(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = dirs.data() + i * d;
    double norm2 = 0.0;
    while (norm2 == 0.0) {
      norm2 = 0.0;
      for (int k = 0; k < d; ++k) {
        row[k] = rng.normal();
        norm2 += row[k] * row[k];
      }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int k = 0; k < d; ++k) row[k] *= inv;
  }
  return DirectionSet(d, std::move(dirs),
                      std::vector<double>(n, 1.0 / static_cast<double>(n)),
                      MonteCarloRule{n, seed});
}

DirectionSet beta_quadrature_directions(int d, std::size_t n) {
  if (d < 3) throw std::invalid_argument("beta quadrature needs d >= 3");
  if (n < 1) throw std::invalid_argument("beta quadrature needs n >= 1");
  if (d == 3) {
    return DirectionSet(3, {1.0, 0.0, 0.0}, {1.0}, BetaQuadratureRule{n});
  }
  const GaussRule& rule = gauss_legendre(n);
  const double half = std::numbers::pi / 4.0;
  std::vector<double> dirs(n * d, 0.0);
  std::vector<double> weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = half + half * rule.nodes[k];
    const double sin_phi = std::sin(phi);
    const double cos_phi = std::cos(phi);
    weights[k] = rule.weights[k] * sin_phi * sin_phi * std::pow(cos_phi, d - 4);
    dirs[k * d + 0] = sin_phi;
    dirs[k * d + 3] = cos_phi;
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return DirectionSet(d, std::move(dirs), std::move(weights),
                      BetaQuadratureRule{n});
}

DirectionSet equal_angle_directions(std::size_t n) {
  if (n < 1) throw std::invalid_argument("equal_angle_directions: n must be >= 1");
  std::vector<double> dirs(2 * n);
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * (k + 0.5) / n;
    dirs[2 * k] = std::cos(angle);
    dirs[2 * k + 1] = std::sin(angle);
  }
  return DirectionSet(2, std::move(dirs), std::move(weights), EqualAngleRule{n});
}

DirectionSet make_directions(int d, const DirectionRule& rule) {
  if (const auto* mc = std::get_if<MonteCarloRule>(&rule)) {
    return mc_directions(d, mc->n, mc->seed);
  }
  if (const auto* ea = std::get_if<EqualAngleRule>(&rule)) {
    if (d != 2) throw std::invalid_argument("equal-angle directions need d = 2");
    return equal_angle_directions(ea->n);
  }
  return beta_quadrature_directions(d, std::get<BetaQuadratureRule>(rule).n);
}

double c_dq(int d, double q, const DirectionRule& rule) {
  check_cdq_args(d, q);
  if (d == 3 || q == kInfinity) return 1.0;
  const DirectionSet dirs = make_directions(d, rule);
  double moment = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    moment += dirs.weight(i) * std::pow(s_of_theta(dirs.direction(i)), q);
  }
  return std::pow(moment, 1.0 / q);
}

MonteCarloEstimate c_dq_monte_carlo(int d, double q, std::size_t n,
                                    std::uint64_t seed) {
  check_cdq_args(d, q);
  if (d == 3 || q == kInfinity) return {1.0, 0.0};
  if (n < 2) throw std::invalid_argument("c_dq_monte_carlo: need n >= 2");
  const DirectionSet dirs = mc_directions(d, n, seed);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = std::pow(s_of_theta(dirs.direction(i)), q);
  }
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double se_mean = std::sqrt(ss / (n - 1) / n);
  const double value = std::pow(mean, 1.0 / q);
  // d/dm m^{1/q} = (1/q) m^{1/q - 1}
  return {value, se_mean * value / (q * mean)};
}

}  // namespace swgeo
