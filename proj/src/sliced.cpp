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

#include "swgeo/sliced.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "swgeo/measure1d.hpp"
#include "swgeo/parallel.hpp"
#include "swgeo/rng.hpp"
#include "swgeo/transport1d.hpp"

namespace swgeo {
namespace {

void check_pq(double p, double q, const char* who) {
  if (!(p >= 1.0) || !(q >= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": p and q must be >= 1");
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

// Radius distribution about the shared center, as a 1D atomic measure.
template <typename Components>
Measure1D radial_law(const Components& comps) {
  std::vector<Atom> atoms;
  atoms.reserve(comps.size());
  for (const auto& c : comps) atoms.push_back({c.radius, c.weight});
  return Measure1D(std::move(atoms), {});
}

template <typename Center>
bool same_center(const Center& a, const Center& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

template <typename Mixture>
double radial_distance(const Mixture& a, const Mixture& b, double p) {
  if (!a.is_concentric() || !b.is_concentric() ||
      !same_center(a.components().front().center,
                   b.components().front().center)) {
    throw std::invalid_argument(
        "w_p_radial: both mixtures must share a single center");
  }
  if (!(p >= 1.0)) throw std::invalid_argument("w_p_radial: p must be >= 1");
  return wasserstein(radial_law(a.components()), radial_law(b.components()),
                     p);
}

template <typename Mixture, typename Project>
std::vector<double> generic_slices(const Mixture& a, const Mixture& b,
                                   double p, const DirectionSet& dirs,
                                   unsigned threads, Project project) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("slice_distances: p must be >= 1");
  }
  std::vector<double> out(dirs.size());
  parallel_for(dirs.size(), threads, [&](std::size_t i) {
    const auto theta = dirs.direction(i);
    out[i] = wasserstein(project(a, theta), project(b, theta), p);
  });
  return out;
}

}  // namespace

PointCloud::PointCloud(int dim, std::vector<double> coords,
                       std::vector<double> weights)
    : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {
  if (dim_ < 1) throw std::invalid_argument("PointCloud: dim must be >= 1");
  if (weights_.empty() || coords_.size() != weights_.size() * dim_) {
    throw std::invalid_argument("PointCloud: size mismatch");
  }
  double total = 0.0;
  double carry = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("PointCloud: weights must be positive");
    }
    const double y = w - carry;
    const double next = total + y;
    carry = (next - total) - y;
    total = next;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("PointCloud: weights must sum to 1");
  }
}

double aggregate_slices(std::span<const double> values,
                        std::span<const double> weights, double q) {
  if (values.size() != weights.size() || values.empty()) {
    throw std::invalid_argument("aggregate_slices: size mismatch");
  }
  if (std::isinf(q)) return *std::max_element(values.begin(), values.end());
  const double peak = *std::max_element(values.begin(), values.end());
  if (peak == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += weights[i] * std::pow(values[i] / peak, q);
  }
  return peak * std::pow(acc, 1.0 / q);
}

std::vector<double> slice_distances(const ShellMixture& a,
                                    const ShellMixture& b, double p,
                                    const DirectionSet& dirs,
                                    unsigned threads) {
  if (a.dim() != b.dim() || a.dim() != dirs.dim()) {
    throw std::invalid_argument("slice_distances: dimension mismatch");
  }
  return generic_slices(a, b, p, dirs, threads,
                        [](const ShellMixture& m, std::span<const double> th) {
                          return radon_project(m, th);
                        });
}

std::vector<double> slice_distances(const CircleMixture& a,
                                    const CircleMixture& b, double p,
                                    const DirectionSet& dirs,
                                    unsigned threads) {
  if (dirs.dim() != 2) {
    throw std::invalid_argument("slice_distances: circles need 2D directions");
  }
  return generic_slices(a, b, p, dirs, threads,
                        [](const CircleMixture& m, std::span<const double> th) {
                          return circle_project(m, th);
                        });
}

double sw_pq(const ShellMixture& a, const ShellMixture& b, double p, double q,
             const DirectionSet& dirs, unsigned threads) {
  check_pq(p, q, "sw_pq");
  const auto values = slice_distances(a, b, p, dirs, threads);
  return aggregate_slices(values, dirs.weights(), q);
}

double sw_pq(const CircleMixture& a, const CircleMixture& b, double p,
             double q, const DirectionSet& dirs, unsigned threads) {
  check_pq(p, q, "sw_pq");
  const auto values = slice_distances(a, b, p, dirs, threads);
  return aggregate_slices(values, dirs.weights(), q);
}

double nu_family_slice_distance(double alpha, std::span<const double> x,
                                double t_a, double t_b,
                                std::span<const double> theta, double p) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("nu_family_slice_distance: p must be >= 1");
  }
  const double s = s_of_theta(theta);
  if (s == 0.0) return 0.0;
  const double beta = std::clamp(dot(theta, x) / s, -1.0, 1.0);
  const double w = std::isinf(p) ? w_inf_mu01(alpha, beta)
                                 : w_p_mu01(alpha, beta, p);
  return s * std::abs(t_a - t_b) * w;
}

double sw_pq_nu_family(double alpha, std::span<const double> x, int d,
                       double t_a, double t_b, double p, double q,
                       const DirectionSet& dirs) {
  check_pq(p, q, "sw_pq_nu_family");
  if (dirs.dim() != d) {
    throw std::invalid_argument("sw_pq_nu_family: dimension mismatch");
  }
  const bool centered =
      std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
  if (std::isinf(q) && centered) {
    const double w = std::isinf(p) ? w_inf_mu01(alpha, 0.0)
                                   : w_p_mu01(alpha, 0.0, p);
    return std::abs(t_a - t_b) * w;
  }
  std::vector<double> values(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    values[i] =
        nu_family_slice_distance(alpha, x, t_a, t_b, dirs.direction(i), p);
  }
  return aggregate_slices(values, dirs.weights(), q);
}

double w_p_radial(const ShellMixture& a, const ShellMixture& b, double p) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("w_p_radial: dimension mismatch");
  }
  return radial_distance(a, b, p);
}

double w_p_radial(const CircleMixture& a, const CircleMixture& b, double p) {
  return radial_distance(a, b, p);
}

double w_p_nu_family(double alpha, double t, double p) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("w_p_nu_family: need alpha in (0,1), t in [0,1]");
  }
  if (!(p >= 1.0)) throw std::invalid_argument("w_p_nu_family: p must be >= 1");
  if (t == 0.0) return 0.0;
  const double gap = 1.0 - alpha * (1.0 - t);
  if (std::isinf(p)) return gap;
  return std::pow(alpha * t * std::pow(gap, p - 1.0), 1.0 / p);
}

PointCloud sample_shell(const ShellMixture& sm, std::size_t n,
                        std::uint64_t seed) {
  const auto& comps = sm.components();
  const std::size_t k = comps.size();
  if (n < k) {
    throw std::invalid_argument(
        "sample_shell: need at least one point per component");
  }
  // One point per component first, the rest by largest remainder.
  std::vector<std::size_t> counts(k, 1);
  const std::size_t extra = n - k;
  std::vector<double> remainder(k);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double share = comps[i].weight * static_cast<double>(extra);
    const auto whole = static_cast<std::size_t>(std::floor(share));
    counts[i] += whole;
    assigned += whole;
    remainder[i] = share - static_cast<double>(whole);
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t j = 0; assigned < extra; ++j, ++assigned) {
    ++counts[order[j % k]];
  }

  const int d = sm.dim();
  Rng rng(seed);
  std::vector<double> coords;
  std::vector<double> weights;
  coords.reserve(n * d);
  weights.reserve(n);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = comps[i];
    const double w = c.weight / static_cast<double>(counts[i]);
    for (std::size_t j = 0; j < counts[i]; ++j) {
      double g[3];
      double norm = 0.0;
      do {
        for (double& v : g) v = rng.normal();
        norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
      } while (norm == 0.0);
      for (int m = 0; m < d; ++m) {
        const double offset = m < 3 ? c.radius * g[m] / norm : 0.0;
        coords.push_back(c.center[m] + offset);
      }
      weights.push_back(w);
    }
  }
  // Renormalize against rounding in w_k / n_k.
  double total = 0.0;
  double carry = 0.0;
  for (double w : weights) {
    const double y = w - carry;
    const double next = total + y;
    carry = (next - total) - y;
    total = next;
  }
  for (double& w : weights) w /= total;
  return PointCloud(d, std::move(coords), std::move(weights));
}

double empirical_wasserstein_1d(std::span<const double> xa,
                                std::span<const double> wa,
                                std::span<const double> xb,
                                std::span<const double> wb, double p) {
  if (xa.size() != wa.size() || xb.size() != wb.size() || xa.empty() ||
      xb.empty()) {
    throw std::invalid_argument("empirical_wasserstein_1d: size mismatch");
  }
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::invalid_argument(
        "empirical_wasserstein_1d: p must be finite and >= 1");
  }
  auto sorted = [](std::span<const double> x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
    return idx;
  };
  const auto ia = sorted(xa);
  const auto ib = sorted(xb);
  std::size_t i = 0, j = 0;
  double left_a = wa[ia[0]], left_b = wb[ib[0]];
  double acc = 0.0;
  while (i < ia.size() && j < ib.size()) {
    const double m = std::min(left_a, left_b);
    acc += m * std::pow(std::abs(xa[ia[i]] - xb[ib[j]]), p);
    left_a -= m;
    left_b -= m;
    if (left_a <= 0.0) {
      if (++i < ia.size()) left_a = wa[ia[i]];
    }
    if (left_b <= 0.0) {
      if (++j < ib.size()) left_b = wb[ib[j]];
    }
  }
  return std::pow(acc, 1.0 / p);
}

double sw_pq_empirical(const PointCloud& x, const PointCloud& y, double p,
                       double q, const DirectionSet& dirs, unsigned threads) {
  check_pq(p, q, "sw_pq_empirical");
  if (x.dim() != y.dim() || x.dim() != dirs.dim()) {
    throw std::invalid_argument("sw_pq_empirical: dimension mismatch");
  }
  std::vector<double> values(dirs.size());
  parallel_for(dirs.size(), threads, [&](std::size_t k) {
    const auto theta = dirs.direction(k);
    std::vector<double> px(x.size()), py(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) px[i] = dot(theta, x.point(i));
    for (std::size_t i = 0; i < y.size(); ++i) py[i] = dot(theta, y.point(i));
    values[k] = empirical_wasserstein_1d(px, x.weights(), py, y.weights(), p);
  });
  return aggregate_slices(values, dirs.weights(), q);
}

double sw_geodesic_deviation(const ShellCurve& curve, double p, double q,
                             const DirectionSet& dirs,
                             std::span<const double> grid, unsigned threads) {
  check_pq(p, q, "sw_geodesic_deviation");
  const bool in_range = std::all_of(grid.begin(), grid.end(), [](double t) {
    return t >= 0.0 && t <= 1.0;
  });
  const bool has_ends =
      std::find(grid.begin(), grid.end(), 0.0) != grid.end() &&
      std::find(grid.begin(), grid.end(), 1.0) != grid.end();
  if (!in_range || !has_ends) {
    throw std::invalid_argument(
        "sw_geodesic_deviation: grid must lie in [0,1] and contain 0 and 1");
  }
  std::vector<ShellMixture> points;
  points.reserve(grid.size());
  for (double t : grid) points.push_back(curve(t));
  const auto first = std::find(grid.begin(), grid.end(), 0.0) - grid.begin();
  const auto last = std::find(grid.begin(), grid.end(), 1.0) - grid.begin();
  const double total = sw_pq(points[first], points[last], p, q, dirs, threads);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double sw = sw_pq(points[i], points[j], p, q, dirs, threads);
      worst = std::max(worst,
                       std::abs(sw - std::abs(grid[i] - grid[j]) * total));
    }
  }
  return worst;
}

}  // namespace swgeo
