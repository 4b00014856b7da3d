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

#ifndef SWGEO_TOOLS_CONFIG_HPP_
#define SWGEO_TOOLS_CONFIG_HPP_

#include <string>
#include <vector>

namespace swgeo::cli {

// Reads a key=value file ('#' comments and blank lines ignored) and returns
// one "--key=value" argument per entry, in file order. Throws
// std::runtime_error with path and line context.
std::vector<std::string> config_arguments(const std::string& path);

// If args (program name first, then the subcommand) carries --config PATH or
// --config=PATH, splices that file's arguments in right after the
// subcommand, so flags given on the command line come later and win.
std::vector<std::string> expand_config(std::vector<std::string> args);

// Splits "a,b,c" into doubles; also accepts "lin:lo:hi:n" and "log:lo:hi:n"
// (n points, evenly spaced in value or in log10). "inf" parses as +infinity.
// Throws std::invalid_argument on malformed input.
std::vector<double> parse_grid(const std::string& text);

// Same as parse_grid for integers.
std::vector<int> parse_int_list(const std::string& text);

// Parses one real; accepts "inf".
double parse_real(const std::string& text);

}  // namespace swgeo::cli

#endif  // SWGEO_TOOLS_CONFIG_HPP_
