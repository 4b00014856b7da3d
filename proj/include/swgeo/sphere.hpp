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

#ifndef SWGEO_SPHERE_HPP_
#define SWGEO_SPHERE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace swgeo {

struct MonteCarloRule {
  std::size_t n;
  std::uint64_t seed;
};

// Quadrature for integrands that depend on theta only through s(theta).
// Under the uniform law on S^{d-1}, s(theta)^2 ~ Beta(3/2, (d-3)/2); with
// s = sin(phi) the density of phi on [0, pi/2] is proportional to
// sin^2(phi) cos^{d-4}(phi), which is smooth, so an n-point Gauss-Legendre
// rule in phi converges quickly.
struct BetaQuadratureRule {
  std::size_t n;
};

// n equally spaced angles 2 pi (k + 1/2) / n on the unit circle (d = 2).
struct EqualAngleRule {
  std::size_t n;
};

using DirectionRule =
    std::variant<MonteCarloRule, BetaQuadratureRule, EqualAngleRule>;

std::string describe(const DirectionRule& rule);

// Weighted nodes on S^{d-1} approximating the normalized surface measure.
class DirectionSet {
 public:
  // directions holds size * dim coordinates, row-major. Throws
  // std::invalid_argument unless every row is a unit vector (1e-12) and the
  // weights are positive and sum to 1 (1e-12).
  DirectionSet(int dim, std::vector<double> directions,
               std::vector<double> weights, DirectionRule provenance);

  int dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> direction(std::size_t i) const {
    return {directions_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  const DirectionRule& provenance() const { return provenance_; }

 private:
  int dim_;
  std::vector<double> directions_;
  std::vector<double> weights_;
  DirectionRule provenance_;
};

// n directions from normalized vectors of d independent standard normals
// drawn from Rng(seed); equal weights.
DirectionSet mc_directions(int d, std::size_t n, std::uint64_t seed);

// Nodes sin(phi_k) e1 + cos(phi_k) e4 with the weights described at
// BetaQuadratureRule. For d = 3, where s(theta) = 1, a single node e1.
DirectionSet beta_quadrature_directions(int d, std::size_t n);

DirectionSet equal_angle_directions(std::size_t n);

DirectionSet make_directions(int d, const DirectionRule& rule);

// C_{d,q} = [mean of s(theta)^q over S^{d-1}]^{1/q}. Exactly 1 for d = 3 or
// q = +inf. Requires d >= 3 and q >= 1.
double c_dq(int d, double q, const DirectionRule& rule);

struct MonteCarloEstimate {
  double value;
  double standard_error;
};

// Monte Carlo C_{d,q} with its delta-method standard error.
MonteCarloEstimate c_dq_monte_carlo(int d, double q, std::size_t n,
                                    std::uint64_t seed);

}  // namespace swgeo

#endif  // SWGEO_SPHERE_HPP_
