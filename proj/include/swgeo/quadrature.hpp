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

#ifndef SWGEO_QUADRATURE_HPP_
#define SWGEO_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace swgeo {

struct GaussRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

// n-point Gauss-Legendre rule on [-1, 1]. Nodes are found by Newton
// iteration on the three-term recurrence, starting from the Chebyshev-like
// guess cos(pi (i + 3/4) / (n + 1/2)). Rules are cached per n.
const GaussRule& gauss_legendre(std::size_t n);

// Integral of f over [a, b] with the n-point rule.
double gauss_legendre_integrate(const std::function<double(double)>& f,
                                double a, double b, std::size_t n);

struct AdaptiveResult {
  double value = 0.0;
  std::size_t nodes_per_panel = 0;  // final node count
  bool converged = false;
};

// Composite Gauss-Legendre over the panels defined by consecutive entries of
// `breaks`. The node count per panel starts at `initial_nodes` and doubles
// until two successive totals differ by less than rel_tol (relative) or
// abs_tol (absolute), or max_nodes is reached.
AdaptiveResult integrate_panels(const std::function<double(double)>& f,
                                std::span<const double> breaks,
                                double rel_tol = 1e-10, double abs_tol = 1e-300,
                                std::size_t initial_nodes = 16,
                                std::size_t max_nodes = 1u << 14);

}  // namespace swgeo

#endif  // SWGEO_QUADRATURE_HPP_
