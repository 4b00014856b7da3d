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

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swgeo/commands.hpp"
#include "swgeo/config.hpp"

namespace {

using namespace swgeo::cli;

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show_list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + show(v[i]);
  return s;
}

// Real flag accepting "inf"; the last occurrence wins.
void real_flag(CLI::App* app, const std::string& name, double& target,
               const std::string& help) {
  app->add_option_function<std::string>(
         name, [&target](const std::string& s) { target = parse_real(s); }, help)
      ->default_str(show(target));
}

void int_flag(CLI::App* app, const std::string& name, int& target,
              const std::string& help) {
  app->add_option_function<std::string>(
         name,
         [&target](const std::string& s) { target = parse_int_list(s).at(0); },
         help)
      ->default_str(show(target));
}

// Comma list or lin:lo:hi:n / log:lo:hi:n.
void grid_flag(CLI::App* app, const std::string& name, std::vector<double>& target,
               const std::string& help) {
  app->add_option_function<std::string>(
         name, [&target](const std::string& s) { target = parse_grid(s); }, help)
      ->default_str(target.empty() ? "built-in" : show_list(target));
}

struct Common {
  std::string out;
  std::string config;
  CommonOptions opts;
};

void common_flags(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "Output path (stdout when omitted)");
  app->add_option("--format", c.opts.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  app->add_option("--seed", c.opts.seed, "Random seed")->capture_default_str();
  app->add_option("--dirs", c.opts.dirs, "Number of directions / quadrature nodes")
      ->capture_default_str();
  app->add_option("--quad", c.opts.quad, "Direction rule: beta or mc")
      ->check(CLI::IsMember({"beta", "mc"}))
      ->capture_default_str();
  app->add_option("--config", c.config,
                  "key=value file; flags on the command line take precedence");
  app->add_option("--threads", c.opts.threads, "Worker threads")
      ->capture_default_str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing output file " + path);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  try {
    args = expand_config(std::move(args));
  } catch (const std::exception& e) {
    std::cerr << "swgeo: error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Sliced Wasserstein geodesic experiments"};
  app.name("swgeo");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  Common common;
  std::function<Output()> action;

  auto* density = app.add_subcommand("density", "Density breakpoints of the 1D geodesic family");
  DensityOptions density_opts;
  real_flag(density, "--alpha", density_opts.alpha, "Atom mass in (0,1)");
  real_flag(density, "--beta", density_opts.beta, "Atom position in [-1,1]");
  grid_flag(density, "--t", density_opts.t, "Times in [0,1]");
  common_flags(density, common);
  density->callback([&] { action = [&] { return run_density(density_opts, common.opts); }; });

  auto* nonequiv = app.add_subcommand("nonequiv", "W_p / SW_pq ratio along the shell family");
  NonequivOptions nonequiv_opts;
  real_flag(nonequiv, "--alpha", nonequiv_opts.alpha, "Inner shell mass at t=1");
  real_flag(nonequiv, "--p", nonequiv_opts.p, "Transport exponent, 1 < p <= inf");
  real_flag(nonequiv, "--q", nonequiv_opts.q, "Slice aggregation exponent");
  int_flag(nonequiv, "--d", nonequiv_opts.d, "Ambient dimension >= 3");
  grid_flag(nonequiv, "--t", nonequiv_opts.t, "Times in (0,1]");
  common_flags(nonequiv, common);
  nonequiv->callback([&] { action = [&] { return run_nonequiv(nonequiv_opts, common.opts); }; });

  auto* holder = app.add_subcommand("holder", "Exponent of W_p(nu_t, nu_0) as t -> 0");
  HolderOptions holder_opts;
  real_flag(holder, "--alpha", holder_opts.alpha, "Inner shell mass at t=1");
  real_flag(holder, "--p", holder_opts.p, "Finite transport exponent > 1");
  int_flag(holder, "--d", holder_opts.d, "Ambient dimension >= 3");
  grid_flag(holder, "--t", holder_opts.t, "Times in (0,1]");
  common_flags(holder, common);
  holder->callback([&] { action = [&] { return run_holder(holder_opts, common.opts); }; });

  auto* hopping = app.add_subcommand("hopping", "Mass on each shell along the family");
  HoppingOptions hopping_opts;
  real_flag(hopping, "--alpha", hopping_opts.alpha, "Inner shell mass at t=1");
  grid_flag(hopping, "--t", hopping_opts.t, "Times in [0,1]");
  common_flags(hopping, common);
  hopping->callback([&] { action = [&] { return run_hopping(hopping_opts, common.opts); }; });

  auto* circle = app.add_subcommand("circle", "W_inf and SW_inf,q for the planar circle family");
  CircleOptions circle_opts;
  real_flag(circle, "--q", circle_opts.q, "Slice aggregation exponent");
  grid_flag(circle, "--t", circle_opts.t, "Times in (0,1]");
  common_flags(circle, common);
  circle->callback([&] { action = [&] { return run_circle(circle_opts, common.opts); }; });

  auto* cdq = app.add_subcommand("cdq", "Dimensional constant C_d,q by quadrature and Monte Carlo");
  CdqOptions cdq_opts;
  cdq->add_option_function<std::string>(
         "--d", [&](const std::string& s) { cdq_opts.d = parse_int_list(s); },
         "Dimensions >= 3")
      ->default_str("3,4,5,7,10");
  grid_flag(cdq, "--q", cdq_opts.q, "Exponents >= 1 (inf allowed)");
  cdq->add_option("--samples", cdq_opts.samples, "Monte Carlo sample count")
      ->capture_default_str();
  common_flags(cdq, common);
  cdq->callback([&] { action = [&] { return run_cdq(cdq_opts, common.opts); }; });

  auto* geo = app.add_subcommand("geodesic-check", "Constant-speed check along a curve");
  GeodesicCheckOptions geo_opts;
  geo->add_option("--family", geo_opts.family,
                  "e.g. 'mu alpha=0.5 beta=0.2', 'nu alpha=0.5 d=3 x=0,0,0 a=2 "
                  "y=0,1,0 z=0,0,0', 'control'")
      ->capture_default_str();
  real_flag(geo, "--p", geo_opts.p, "Transport exponent");
  real_flag(geo, "--q", geo_opts.q, "Slice aggregation exponent (nu only)");
  grid_flag(geo, "--grid", geo_opts.grid, "Times in [0,1], including 0 and 1");
  real_flag(geo, "--tolerance", geo_opts.tolerance, "Largest accepted deviation");
  common_flags(geo, common);
  geo->callback([&] { action = [&] { return run_geodesic_check(geo_opts, common.opts); }; });

  auto* dist = app.add_subcommand("distance1d", "W_p between two measure files");
  Distance1dOptions dist_opts;
  std::vector<std::string> measure_files;
  dist->add_option("--measure-file", measure_files, "Two measure files")
      ->expected(2)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
      ->required();
  real_flag(dist, "--p", dist_opts.p, "Transport exponent");
  common_flags(dist, common);
  dist->callback([&] {
    action = [&] {
      dist_opts.measure_a = measure_files.at(0);
      dist_opts.measure_b = measure_files.at(1);
      return run_distance1d(dist_opts, common.opts);
    };
  });

  auto* sliced = app.add_subcommand("sliced", "SW_pq between two shell files");
  SlicedOptions sliced_opts;
  std::vector<std::string> shell_files;
  sliced->add_option("--shell-file", shell_files, "Two shell files")
      ->expected(2)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
      ->required();
  real_flag(sliced, "--p", sliced_opts.p, "Transport exponent");
  real_flag(sliced, "--q", sliced_opts.q, "Slice aggregation exponent");
  common_flags(sliced, common);
  sliced->callback([&] {
    action = [&] {
      sliced_opts.shell_a = shell_files.at(0);
      sliced_opts.shell_b = shell_files.at(1);
      return run_sliced(sliced_opts, common.opts);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "swgeo: error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Output result = action();
    write_output(common.out, result.text);
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "swgeo: error: " << e.what() << "\n";
    return 2;
  }
}
