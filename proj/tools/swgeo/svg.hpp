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

#ifndef SWGEO_TOOLS_SVG_HPP_
#define SWGEO_TOOLS_SVG_HPP_

#include <string>
#include <vector>

namespace swgeo::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

struct Marker {
  double x;
  double y;
  std::string label;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;
  std::vector<Marker> markers;
};

// Self-contained SVG document with the panels laid out left to right under
// a caption line. Non-finite points, and non-positive ones on log axes,
// are skipped.
std::string render(const std::vector<Panel>& panels, const std::string& caption);

}  // namespace swgeo::svg

#endif  // SWGEO_TOOLS_SVG_HPP_
