// Copyright 2026 The bridgevario Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bridgevario::cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct SvgOptions {
  bool log_x = false;
  int width = 640;
  int height = 400;
  std::string x_label = "lag";
  std::string y_label = "gamma";
};

/// Standalone SVG 1.1 document with a framed plot area, axis ticks, one
/// polyline per series and a legend. Output depends only on the input.
/// Throws Error(kEmptySeries) for no series or an empty one,
/// Error(kNonFinite) for non-finite coordinates and Error(kInvalidArgument)
/// for x <= 0 on a log axis.
std::string render_curve_svg(std::span<const Series> series,
                             const SvgOptions& options = {});

}  // namespace bridgevario::cli
