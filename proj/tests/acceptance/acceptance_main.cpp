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


// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "swgeo/families.hpp"
#include "swgeo/measure1d.hpp"
#include "swgeo/sliced.hpp"
#include "swgeo/sphere.hpp"
#include "swgeo/transport1d.hpp"
#include "swgeo/commands.hpp"

namespace {

using namespace swgeo;

struct Result {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const std::vector<double> kGrid5 = {0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kZero3 = {0.0, 0.0, 0.0};

double relative_error(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

Result optimal_map_golden() {
  const double alpha = 0.5, beta = 0.2;
  const PiecewiseLinearMap map =
      optimal_map(Measure1D::uniform(-1.0, 1.0), mu_family(alpha, beta, 1.0));
  // Uniform mass (s + 1) / 2 below s fills the left density part, then the
  // atom, then the right density part.
  const double left_end = (1.0 - alpha) * (beta + 1.0) - 1.0;
  const double atom_end = left_end + 2.0 * alpha;
  auto reference = [&](double s) {
    if (s <= left_end) return -1.0 + (s + 1.0) / (1.0 - alpha);
    if (s <= atom_end) return beta;
    return beta + (s - atom_end) / (1.0 - alpha);
  };
  double err = 0.0;
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const double s = -1.0 + 2.0 * k / (n - 1);
    err = std::max(err, std::abs(map(s) - reference(s)));
  }
  return {err < 1e-12, "sup error " + num(err)};
}

Result interpolation_identity() {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double alpha = 0.05 + 0.9 * unit(gen);
    const double beta = -1.0 + 2.0 * unit(gen);
    const double t = unit(gen);
    const Measure1D got =
        interpolate(mu_family(alpha, beta, 0.0), mu_family(alpha, beta, 1.0), t);
    err = std::max(err, cdf_sup_distance(got, mu_family(alpha, beta, t)));
    for (int k = 0; k <= 200; ++k) {
      const double x = -1.0 + 2.0 * k / 200.0;
      err = std::max(err, std::abs(got.cdf(x) - oracle::mu_family_cdf(alpha, beta, t, x)));
    }
  }
  return {err < 1e-12, "CDF sup difference " + num(err)};
}

Result constant_speed_1d() {
  double worst = 0.0;
  for (double alpha : {0.3, 0.5, 0.8}) {
    for (double beta : {-0.5, 0.0, 0.2}) {
      for (double p : {1.0, 1.5, 2.0, 3.0}) {
        worst = std::max(worst, geodesic_deviation(mu_curve(alpha, beta), p, kGrid5));
      }
    }
    worst = std::max(worst, geodesic_deviation(mu_curve(alpha, 0.0), kInfinity, kGrid5));
  }
  return {worst < 1e-8, "max deviation " + num(worst)};
}

Result beta_zero_distance() {
  double worst = 0.0;
  for (double alpha : {0.3, 0.5, 0.8}) {
    const Measure1D mu0 = mu_family(alpha, 0.0, 0.0);
    const Measure1D mu1 = mu_family(alpha, 0.0, 1.0);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double want = alpha / std::pow(p + 1.0, 1.0 / p);
      worst = std::max(worst, std::abs(wasserstein_p(mu0, mu1, p) - want));
    }
    worst = std::max(worst, std::abs(wasserstein_inf(mu0, mu1) - alpha));
  }
  return {worst < 1e-10, "max error " + num(worst)};
}

Result shell_sliced() {
  const double alpha = 0.5;
  double worst_rel = 0.0;
  double worst_z = 0.0;
  bool sup_ok = true;
  for (int d : {3, 4, 7}) {
    const DirectionSet beta = beta_quadrature_directions(d, 64);
    std::vector<double> e1(d, 0.0);
    e1[0] = 1.0;
    const DirectionSet peak(d, e1, {1.0}, BetaQuadratureRule{1});
    const DirectionSet mc = mc_directions(d, 100000, 5);
    for (double p : {1.5, 2.0, 3.0}) {
      for (double q : {1.0, 2.0, kInfinity}) {
        const double c = q == kInfinity ? 1.0 : oracle::c_dq(d, q);
        for (double t : {0.25, 0.5, 1.0}) {
          const double want = alpha * t * c / std::pow(p + 1.0, 1.0 / p);
          const ShellMixture a = nu_family(alpha, kZero3, t, d);
          const ShellMixture b = nu_family(alpha, kZero3, 0.0, d);
          const double got = sw_pq(a, b, p, q, q == kInfinity ? peak : beta);
          worst_rel = std::max(worst_rel, relative_error(got, want));
          std::vector<double> values(mc.size());
          for (std::size_t i = 0; i < mc.size(); ++i) {
            values[i] = nu_family_slice_distance(alpha, kZero3, t, 0.0, mc.direction(i), p);
          }
          if (q == kInfinity) {
            const double top = *std::max_element(values.begin(), values.end());
            sup_ok = sup_ok && top <= want * (1.0 + 1e-12) && top >= 0.99 * want;
            continue;
          }
          double mean = 0.0;
          for (double& v : values) {
            v = std::pow(v, q);
            mean += v;
          }
          mean /= static_cast<double>(values.size());
          double ss = 0.0;
          for (double v : values) ss += (v - mean) * (v - mean);
          const double n = static_cast<double>(values.size());
          const double se_mean = std::sqrt(ss / (n - 1.0) / n);
          const double estimate = std::pow(mean, 1.0 / q);
          const double se = se_mean * estimate / (q * mean);
          const double gap = std::abs(estimate - want);
          if (gap > 1e-10 * want) worst_z = std::max(worst_z, gap / se);
        }
      }
    }
  }
  return {worst_rel < 1e-6 && worst_z < 4.0 && sup_ok,
          "max relative error " + num(worst_rel) + ", max MC z " + num(worst_z) +
              (sup_ok ? ", MC maxima below the supremum" : ", MC maximum out of range")};
}

Result shell_wasserstein() {
  double worst = 0.0;
  for (double alpha : {0.2, 0.5, 0.9}) {
    for (double t : {0.1, 0.5, 1.0}) {
      for (double p : {1.0, 2.0, 3.5}) {
        const double got = w_p_radial(nu_family(alpha, kZero3, t, 3),
                                      nu_family(alpha, kZero3, 0.0, 3), p);
        const double want =
            std::pow(alpha * t * std::pow(1.0 - alpha * (1.0 - t), p - 1.0), 1.0 / p);
        worst = std::max(worst, std::abs(got - want));
      }
    }
  }
  // Bracket from optimal assignment between Fibonacci lattices; the
  // lattice-to-lattice distance of the unit shell bounds the discretization.
  const std::size_t n = 450;
  auto target = oracle::fibonacci_sphere(2 * n / 3, 0.3, 0.7, 1.1);
  for (auto p : oracle::fibonacci_sphere(n / 3, 2.0, 0.2, 0.5)) {
    target.push_back({0.25 * p[0], 0.25 * p[1], 0.25 * p[2]});
  }
  const auto start = oracle::fibonacci_sphere(n, 0.0, 0.0, 0.0);
  const double discrete = oracle::assignment_distance(target, start, 2.0);
  const double noise = oracle::assignment_distance(
      start, oracle::fibonacci_sphere(n, 1.3, 0.4, 2.2), 2.0);
  const double lower = discrete - noise;
  const double upper = discrete + noise;
  const double exact = w_p_radial(nu_family(0.5, kZero3, 0.5, 3),
                                  nu_family(0.5, kZero3, 0.0, 3), 2.0);
  const bool inside = exact >= lower - 0.01 && exact <= upper + 0.01;
  return {worst < 1e-12 && inside,
          "formula error " + num(worst) + ", W_2 " + num(exact) + " vs bracket [" +
              num(lower) + ", " + num(upper) + "]"};
}

std::vector<double> quarter_decades() {
  std::vector<double> t;
  for (int k = 0; k <= 12; ++k) t.push_back(std::pow(10.0, -4.0 + k / 4.0));
  return t;
}

Result ratio_exponent() {
  const double alpha = 0.5;
  const DirectionSet dirs = beta_quadrature_directions(3, 1);
  const std::vector<double> t = quarter_decades();
  std::string detail;
  bool pass = true;
  for (double p : {2.0, 4.0}) {
    std::vector<double> ratio;
    for (double ti : t) {
      const double w = w_p_radial(nu_family(alpha, kZero3, ti, 3),
                                  nu_family(alpha, kZero3, 0.0, 3), p);
      ratio.push_back(w / sw_pq_nu_family(alpha, kZero3, 3, ti, 0.0, p, 2.0, dirs));
    }
    const double slope = cli::log_log_slope(t, ratio, 1e-4, 1e-1);
    const double err = std::abs(slope - (1.0 / p - 1.0));
    pass = pass && err <= 0.01;
    detail += (detail.empty() ? "" : ", ") + std::string("p=") + num(p) +
              " slope " + num(slope) + " (off by " + num(err) + ")";
  }
  return {pass, detail};
}

Result holder_fit() {
  const double alpha = 0.5;
  const std::vector<double> t = quarter_decades();
  std::string detail;
  bool pass = true;
  for (double p : {2.0, 4.0}) {
    std::vector<double> w;
    for (double ti : t) {
      w.push_back(w_p_radial(nu_family(alpha, kZero3, ti, 3),
                             nu_family(alpha, kZero3, 0.0, 3), p));
    }
    const double slope = cli::log_log_slope(t, w, 1e-4, 1e-1);
    const double err = std::abs(slope - 1.0 / p);
    pass = pass && err <= 0.01;
    detail += (detail.empty() ? "" : ", ") + std::string("p=") + num(p) +
              " exponent " + num(slope) + " (off by " + num(err) + ")";
  }
  return {pass, detail};
}

Result dimensional_constant() {
  const DirectionRule rule = BetaQuadratureRule{64};
  bool exact = true;
  for (double q : {1.0, 2.0, 4.0, kInfinity}) exact = exact && c_dq(3, q, rule) == 1.0;
  for (int d : {4, 5, 7, 10}) exact = exact && c_dq(d, kInfinity, rule) == 1.0;
  const double want = std::sqrt(0.75);
  const double oracle_err = std::abs(oracle::c_dq(4, 2.0) - want);
  const double quad_err = std::abs(c_dq(4, 2.0, rule) - want);
  const MonteCarloEstimate mc = c_dq_monte_carlo(4, 2.0, 100000, 7);
  const double z = std::abs(mc.value - want) / mc.standard_error;
  return {exact && oracle_err < 1e-12 && quad_err < 1e-6 && z < 4.0,
          std::string(exact ? "exact ones hold" : "exact ones broken") +
              ", quadrature error " + num(quad_err) + ", MC z " + num(z)};
}

struct CircleGolden {
  std::string winner;
  std::vector<std::pair<double, double>> rows;
};

CircleGolden read_circle_golden() {
  std::ifstream in(std::string(SWGEO_GOLDEN_DIR) + "/circle_sw_inf.txt");
  CircleGolden golden;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    if (line.rfind("winner", 0) == 0) {
      row >> line >> golden.winner;
      continue;
    }
    double t = 0.0, v = 0.0;
    row >> t >> v;
    golden.rows.emplace_back(t, v);
  }
  return golden;
}

Result circle_infinity() {
  const DirectionSet dirs = equal_angle_directions(64);
  const CircleMixture start = circle_family(0.0);
  bool w_inf_one = true;
  double q_spread = 0.0;
  double oracle_err = 0.0;
  double sin_err = 0.0;
  double alternative_err = 0.0;
  for (double t : {0.1, 0.5, 1.0}) {
    const CircleMixture cm = circle_family(t);
    w_inf_one = w_inf_one && w_p_radial(cm, start, kInfinity) == 1.0;
    std::vector<double> sw;
    for (double q : {1.0, 2.0, kInfinity}) sw.push_back(sw_pq(cm, start, kInfinity, q, dirs));
    const auto [lo, hi] = std::minmax_element(sw.begin(), sw.end());
    q_spread = std::max(q_spread, *hi - *lo);
    const double per_theta = slice_distances(cm, start, kInfinity, dirs).front();
    const double brute = oracle::sorted_matching_distance(
        oracle::circle_projection_points(t, 100000),
        oracle::circle_projection_points(0.0, 100000), kInfinity);
    oracle_err = std::max(oracle_err, std::abs(per_theta - brute));
    sin_err = std::max(sin_err, std::abs(brute - std::sin(std::numbers::pi * t / 2.0)));
    alternative_err = std::max(alternative_err, std::abs(brute - 2.0 * std::sin(t) / std::numbers::pi));
  }
  const std::string winner = sin_err < alternative_err ? "sin_pi_t_half" : "two_sin_t_over_pi";
  const CircleGolden golden = read_circle_golden();
  double golden_err = golden.rows.empty() ? 1.0 : 0.0;
  for (const auto& [t, v] : golden.rows) {
    const double per_theta = slice_distances(circle_family(t), start, kInfinity, dirs).front();
    golden_err = std::max(golden_err, std::abs(per_theta - v));
  }
  const bool pass = w_inf_one && q_spread <= 1e-10 && oracle_err < 1e-3 &&
                    winner == golden.winner && golden_err < 1e-9;
  return {pass, std::string(w_inf_one ? "W_inf = 1" : "W_inf != 1") + ", q spread " +
                    num(q_spread) + ", oracle error " + num(oracle_err) + ", winner " +
                    winner + " (golden " + golden.winner + ", error " + num(golden_err) + ")"};
}

Result transformed_geodesics() {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const int d = 3 + i % 3;
    const double alpha = 0.1 + 0.8 * unit(gen);
    const double a = (unit(gen) < 0.5 ? -1.0 : 1.0) * (0.2 + 1.8 * unit(gen));
    std::vector<double> x(d, 0.0), y(d), z(d);
    double norm = 0.0;
    for (int k = 0; k < 3; ++k) {
      x[k] = -1.0 + 2.0 * unit(gen);
      norm += x[k] * x[k];
    }
    const double scale = unit(gen) / std::max(std::sqrt(norm), 1e-300);
    for (int k = 0; k < 3; ++k) x[k] *= scale;
    for (int k = 0; k < d; ++k) {
      y[k] = -2.0 + 4.0 * unit(gen);
      z[k] = -2.0 + 4.0 * unit(gen);
    }
    const double p = i % 2 == 0 ? 2.0 : 1.5;
    const double q = i % 3 == 0 ? kInfinity : 1.0 + i % 3;
    const DirectionSet dirs = mc_directions(d, 48, 100 + i);
    worst = std::max(worst, sw_geodesic_deviation(
                                transformed_nu_curve(alpha, x, d, a, y, z), p, q,
                                dirs, kGrid5));
  }
  return {worst < 1e-6, "max deviation " + num(worst)};
}

Result empirical_convergence() {
  const ShellMixture a = nu_family(0.5, kZero3, 0.5, 3);
  const ShellMixture b = nu_family(0.5, kZero3, 0.0, 3);
  const DirectionSet dirs = mc_directions(3, 64, 3);
  double mean = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    mean += sw_pq_empirical(sample_shell(a, 10000, seed),
                            sample_shell(b, 10000, 1000 + seed), 2.0, 2.0, dirs);
  }
  mean /= 5.0;
  const double want = 0.25 / std::sqrt(3.0);
  const double err = std::abs(mean - want);
  return {err < 0.01, "mean " + num(mean) + " vs " + num(want) + ", error " + num(err)};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Result cli_determinism() {
  const std::string fixtures = SWGEO_FIXTURE_DIR;
  const std::vector<std::string> commands = {
      "density",
      "density --format svg",
      "nonequiv --quad mc --dirs 256 --seed 4",
      "nonequiv --d 5 --q inf --p 4",
      "holder --p 4",
      "hopping",
      "circle --q inf",
      "circle --quad mc --dirs 128 --seed 9",
      "cdq --samples 20000 --seed 3",
      "geodesic-check --family 'nu alpha=0.4 d=5 x=0.3,0.2,0.1 a=1.5 y=0,1,0,0,1 z=1,0,0,0,0' "
      "--quad mc --dirs 64 --seed 2",
      "geodesic-check --family control",
      "distance1d --measure-file " + fixtures + "/uniform.txt " + fixtures + "/half_atom.txt",
      "sliced --shell-file " + fixtures + "/nu_half.txt " + fixtures +
          "/unit_shell.txt --quad mc --dirs 200 --seed 6",
  };
  const auto dir = std::filesystem::temp_directory_path() / "swgeo_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t identical = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::vector<std::string> outputs;
    bool ran = true;
    for (const char* threads : {"1", "1", "4"}) {
      const auto out = dir / ("run" + std::to_string(i) + "_" + std::to_string(outputs.size()));
      std::filesystem::remove(out);
      const std::string cmd = std::string(SWGEO_CLI_PATH) + " " + commands[i] +
                              " --threads " + threads + " --out " + out.string() +
                              " > /dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      ran = ran && WIFEXITED(status) && WEXITSTATUS(status) <= 1;
      outputs.push_back(slurp(out));
    }
    if (ran && !outputs[0].empty() && outputs[0] == outputs[1] && outputs[0] == outputs[2]) {
      ++identical;
    } else if (first_bad.empty()) {
      first_bad = commands[i];
    }
  }
  std::filesystem::remove_all(dir);
  return {identical == commands.size(),
          std::to_string(identical) + "/" + std::to_string(commands.size()) +
              " invocations byte-identical across reruns and 1 vs 4 threads" +
              (first_bad.empty() ? "" : ", first mismatch: " + first_bad)};
}

struct Criterion {
  const char* name;
  std::function<Result()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"optimal map matches the piecewise formula", optimal_map_golden},
      {"displacement interpolation reproduces the family", interpolation_identity},
      {"1D family has constant speed", constant_speed_1d},
      {"closed-form W_p for a centered atom", beta_zero_distance},
      {"shell sliced distance closed form", shell_sliced},
      {"shell W_p closed form and assignment bracket", shell_wasserstein},
      {"W_p / SW ratio exponent", ratio_exponent},
      {"Hoelder exponent of W_p", holder_fit},
      {"dimensional constant", dimensional_constant},
      {"circle family at p = inf", circle_infinity},
      {"transformed shell geodesics", transformed_geodesics},
      {"empirical sliced distance", empirical_convergence},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    const auto start = std::chrono::steady_clock::now();
    try {
      r = criteria[i].check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (!r.pass) ++failures;
    std::printf("[%s] AC%02zu %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, r.detail.c_str(), elapsed.count());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
