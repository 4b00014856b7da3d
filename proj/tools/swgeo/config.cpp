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

#include "swgeo/config.hpp"

#include <charconv>
#include <limits>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swgeo::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

double parse_real(const std::string& text) {
  const std::string s = trim(text);
  if (s == "inf" || s == "+inf" || s == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  double value = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

std::vector<double> parse_grid(const std::string& text) {
  const std::string s = trim(text);
  if (s.rfind("lin:", 0) == 0 || s.rfind("log:", 0) == 0) {
    const auto parts = split(s, ':');
    if (parts.size() != 4) {
      throw std::invalid_argument("grid '" + text + "': expected kind:lo:hi:n");
    }
    const double lo = parse_real(parts[1]);
    const double hi = parse_real(parts[2]);
    const double count = parse_real(parts[3]);
    if (count < 1 || count != std::floor(count)) {
      throw std::invalid_argument("grid '" + text + "': bad point count");
    }
    const auto n = static_cast<std::size_t>(count);
    const bool log = parts[0] == "log";
    if (log && !(lo > 0.0 && hi > 0.0)) {
      throw std::invalid_argument("grid '" + text + "': log grid needs lo, hi > 0");
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      out[i] = log ? std::pow(10.0, std::log10(lo) +
                                        f * (std::log10(hi) - std::log10(lo)))
                   : lo + f * (hi - lo);
    }
    // Pin the endpoints against rounding.
    out.front() = lo;
    if (n > 1) out.back() = hi;
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_grid(text)) {
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      throw std::invalid_argument("not an integer list: '" + text + "'");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::vector<std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos || trim(s.substr(0, eq)).empty()) {
      throw std::runtime_error(path + ":" + std::to_string(number) +
                               ": expected key=value");
    }
    std::string key = trim(s.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out.push_back("--" + key + "=" + trim(s.substr(eq + 1)));
  }
  return out;
}

std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty() || args.size() < 2) return args;
  const auto extra = config_arguments(path);
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

}  // namespace swgeo::cli
