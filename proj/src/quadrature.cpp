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

#include "swgeo/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace swgeo {
namespace {

GaussRule compute_rule(std::size_t n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        const double kd = static_cast<double>(k);
        p0 = ((2.0 * kd - 1.0) * z * p1 - (kd - 1.0) * p2) / kd;
      }
      derivative = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / derivative;
      z -= step;
      if (std::abs(step) <= 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(compute_rule(n));
  return *slot;
}

double gauss_legendre_integrate(const std::function<double(double)>& f,
                                double a, double b, std::size_t n) {
  const GaussRule& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

AdaptiveResult integrate_panels(const std::function<double(double)>& f,
                                std::span<const double> breaks, double rel_tol,
                                double abs_tol, std::size_t initial_nodes,
                                std::size_t max_nodes) {
  AdaptiveResult result;
  if (breaks.size() < 2) {
    result.converged = true;
    return result;
  }
  auto total = [&](std::size_t n) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      if (breaks[k + 1] > breaks[k]) {
        sum += gauss_legendre_integrate(f, breaks[k], breaks[k + 1], n);
      }
    }
    return sum;
  };
  std::size_t n = std::max<std::size_t>(initial_nodes, 1);
  double previous = total(n);
  while (n < max_nodes) {
    n *= 2;
    const double current = total(n);
    const double diff = std::abs(current - previous);
    previous = current;
    if (diff <= rel_tol * std::abs(current) || diff <= abs_tol) {
      result.converged = true;
      break;
    }
  }
  result.value = previous;
  result.nodes_per_panel = n;
  return result;
}

}  // namespace swgeo
