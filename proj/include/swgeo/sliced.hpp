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

#ifndef SWGEO_SLICED_HPP_
#define SWGEO_SLICED_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swgeo/families.hpp"
#include "swgeo/sphere.hpp"

namespace swgeo {

// Weighted point cloud in R^d.
class PointCloud {
 public:
  // coords holds weights.size() * dim values, row-major. Throws
  // std::invalid_argument unless weights are positive and sum to 1 (1e-12).
  PointCloud(int dim, std::vector<double> coords, std::vector<double> weights);

  int dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> weights() const { return weights_; }

 private:
  int dim_;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

// [sum_k w_k values_k^q]^{1/q}; the maximum when q = +inf.
double aggregate_slices(std::span<const double> values,
                        std::span<const double> weights, double q);

// W_p between the Radon projections of a and b along every node, generic
// path (projection, quantile, exact 1D transport). p may be +inf.
// Evaluations may run on `threads` workers; the output is indexed by node.
std::vector<double> slice_distances(const ShellMixture& a,
                                    const ShellMixture& b, double p,
                                    const DirectionSet& dirs,
                                    unsigned threads = 1);
std::vector<double> slice_distances(const CircleMixture& a,
                                    const CircleMixture& b, double p,
                                    const DirectionSet& dirs,
                                    unsigned threads = 1);

// SW_{p,q} over the nodes of dirs: the weighted L^q mean of per-node W_p, or
// the node maximum for q = +inf. Throws std::invalid_argument on dimension
// mismatch or p, q < 1.
double sw_pq(const ShellMixture& a, const ShellMixture& b, double p, double q,
             const DirectionSet& dirs, unsigned threads = 1);
double sw_pq(const CircleMixture& a, const CircleMixture& b, double p,
             double q, const DirectionSet& dirs, unsigned threads = 1);

// Closed-form W_p between projections of nu_family(alpha, x, t_a, d) and
// nu_family(alpha, x, t_b, d) along theta:
//   s(theta) |t_a - t_b| W_p(mu_0^{alpha,beta}, mu_1^{alpha,beta}),
//   beta = theta.x / s(theta).
double nu_family_slice_distance(double alpha, std::span<const double> x,
                                double t_a, double t_b,
                                std::span<const double> theta, double p);

// SW_{p,q} along nu_family using nu_family_slice_distance per node. For
// q = +inf and x = 0 the supremum over the whole sphere is attained where
// s(theta) = 1 and is returned directly; otherwise the node maximum.
double sw_pq_nu_family(double alpha, std::span<const double> x, int d,
                       double t_a, double t_b, double p, double q,
                       const DirectionSet& dirs);

// Full-dimensional W_p between concentric mixtures (one shared center for
// all components of both). |x - y| >= ||x| - |y|| bounds W_p below by W_p of
// the radial laws, and moving mass along rays attains that bound, so W_p
// equals the 1D distance between the radius distributions. p may be +inf.
// Throws std::invalid_argument for non-concentric input.
double w_p_radial(const ShellMixture& a, const ShellMixture& b, double p);
double w_p_radial(const CircleMixture& a, const CircleMixture& b, double p);

// [alpha t (1 - alpha (1 - t))^{p-1}]^{1/p}: W_p(nu_t, nu_0) for x = 0.
// For p = +inf, 1 - alpha (1 - t) when t > 0 and 0 at t = 0.
double w_p_nu_family(double alpha, double t, double p);

// n points split across components by weight (largest remainder, at least
// one point each); sphere points are normalized 3D Gaussians scaled by the
// radius and shifted by the center. Each point of component k carries
// weight w_k / n_k.
PointCloud sample_shell(const ShellMixture& sm, std::size_t n,
                        std::uint64_t seed);

// Exact W_p between two weighted 1D atom sets by merged-quantile matching.
double empirical_wasserstein_1d(std::span<const double> xa,
                                std::span<const double> wa,
                                std::span<const double> xb,
                                std::span<const double> wb, double p);

// SW_{p,q} between point clouds: per node, project, sort and match.
// Finite p only.
double sw_pq_empirical(const PointCloud& x, const PointCloud& y, double p,
                       double q, const DirectionSet& dirs,
                       unsigned threads = 1);

// max over grid pairs of |SW(c(t), c(s)) - |t - s| SW(c(0), c(1))|.
double sw_geodesic_deviation(const ShellCurve& curve, double p, double q,
                             const DirectionSet& dirs,
                             std::span<const double> grid,
                             unsigned threads = 1);

}  // namespace swgeo

#endif  // SWGEO_SLICED_HPP_
