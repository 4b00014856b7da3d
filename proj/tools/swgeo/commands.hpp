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

#ifndef SWGEO_TOOLS_COMMANDS_HPP_
#define SWGEO_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "swgeo/families.hpp"
#include "swgeo/sphere.hpp"

namespace swgeo::cli {

inline constexpr const char* kVersion = "1.0.0";

// Rendered command output. exit_code is nonzero when a check failed.
struct Output {
  std::string text;
  int exit_code = 0;
};

struct CommonOptions {
  std::string format = "csv";  // csv | svg
  std::uint64_t seed = 1;
  std::size_t dirs = 64;
  std::string quad = "beta";  // beta | mc
  unsigned threads = 1;
};

// Direction rule selected by --quad and --dirs (--seed for mc).
DirectionRule direction_rule(const CommonOptions& common);

struct DensityOptions {
  double alpha = 0.5;
  double beta = 0.2;
  std::vector<double> t = {0.0, 0.1, 0.5};
};
Output run_density(const DensityOptions& opts, const CommonOptions& common);

struct NonequivOptions {
  double alpha = 0.5;
  double p = 2.0;
  double q = 2.0;
  int d = 3;
  std::vector<double> t;  // empty: 1e-4 .. 1e-1 in quarter decades, then 0.25, 0.5, 1
};
Output run_nonequiv(const NonequivOptions& opts, const CommonOptions& common);

struct HolderOptions {
  double alpha = 0.5;
  double p = 2.0;
  int d = 3;
  std::vector<double> t;  // same default grid as nonequiv
};
Output run_holder(const HolderOptions& opts, const CommonOptions& common);

struct HoppingOptions {
  double alpha = 0.5;
  std::vector<double> t = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                           0.6, 0.7, 0.8, 0.9, 1.0};
};
Output run_hopping(const HoppingOptions& opts, const CommonOptions& common);

struct CircleOptions {
  double q = 2.0;
  std::vector<double> t = {0.1, 0.25, 0.5, 0.75, 1.0};
};
Output run_circle(const CircleOptions& opts, const CommonOptions& common);

struct CdqOptions {
  std::vector<int> d = {3, 4, 5, 7, 10};
  std::vector<double> q = {1.0, 2.0, 4.0, kInfinity};
  std::size_t samples = 100000;
};
Output run_cdq(const CdqOptions& opts, const CommonOptions& common);

struct GeodesicCheckOptions {
  std::string family = "mu alpha=0.5 beta=0.2";
  double p = 2.0;
  double q = 2.0;
  std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  double tolerance = 1e-6;
};
Output run_geodesic_check(const GeodesicCheckOptions& opts,
                          const CommonOptions& common);

struct Distance1dOptions {
  std::string measure_a;
  std::string measure_b;
  double p = 2.0;
};
Output run_distance1d(const Distance1dOptions& opts,
                      const CommonOptions& common);

struct SlicedOptions {
  std::string shell_a;
  std::string shell_b;
  double p = 2.0;
  double q = 2.0;
};
Output run_sliced(const SlicedOptions& opts, const CommonOptions& common);

// Least-squares slope of log(y) against log(x) over points with
// lo <= x <= hi and x, y > 0. Throws std::invalid_argument with fewer than
// two such points.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y,
                     double lo, double hi);

}  // namespace swgeo::cli

#endif  // SWGEO_TOOLS_COMMANDS_HPP_
