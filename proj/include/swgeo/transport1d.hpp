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

#ifndef SWGEO_TRANSPORT1D_HPP_
#define SWGEO_TRANSPORT1D_HPP_

#include <functional>
#include <span>

#include "swgeo/measure1d.hpp"

namespace swgeo {

// A curve of measures evaluated on demand.
using MeasureCurve = std::function<Measure1D(double)>;

// Monotone rearrangement T = F_nu^o . F_mu, optimal for every cost |x-y|^p
// when mu has no atoms. Built exactly by composing the piecewise-linear CDF
// of mu with the quantile breakpoints of nu. Outside the support of mu the
// map is constant.
//
// Throws std::invalid_argument if mu has atoms or either measure is not a
// discrete mixture.
PiecewiseLinearMap optimal_map(const Measure1D& mu, const Measure1D& nu);

// Displacement interpolation ((1 - lambda) id + lambda T)_# mu. Equals mu at
// lambda = 0 and nu at lambda = 1 (up to rounding in the breakpoints).
Measure1D interpolate(const Measure1D& mu, const Measure1D& nu, double lambda);

// W_p for finite p >= 1 through the quantile representation
//   W_p^p = int_0^1 |F_mu^o(s) - F_nu^o(s)|^p ds.
// Discrete mixtures integrate exactly piece by piece; anything with an
// arcsine part uses composite Gauss-Legendre split at every kink, doubling
// the node count until the total changes by less than 1e-10 (relative).
double wasserstein_p(const Measure1D& mu, const Measure1D& nu, double p);

// sup_s |F_mu^o(s) - F_nu^o(s)|. Exact over merged breakpoints for discrete
// mixtures; otherwise a 10^4-point grid plus all kinks, refined by golden
// section around the grid maximum.
double wasserstein_inf(const Measure1D& mu, const Measure1D& nu);

// wasserstein_p, or wasserstein_inf when p is +infinity.
double wasserstein(const Measure1D& mu, const Measure1D& nu, double p);

// Same quantities directly on quantile functions.
double quantile_distance(const QuantileFn& a, const QuantileFn& b, double p);

// max over grid pairs (t, s) of |W_p(c(t), c(s)) - |t - s| W_p(c(0), c(1))|.
// The grid must lie in [0, 1] and contain both 0 and 1.
double geodesic_deviation(const MeasureCurve& curve, double p,
                          std::span<const double> grid);

}  // namespace swgeo

#endif  // SWGEO_TRANSPORT1D_HPP_
