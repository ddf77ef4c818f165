// Copyright 2026 The Kakeya Authors.
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

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kakeya/error.hpp"
#include "kakeya/hpolytope.hpp"
#include "kakeya/shape.hpp"

namespace kakeya::svg {

// Fixed 512 x 512 viewbox, autoscaled world coordinates, y axis up.

inline const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                 "#9467bd", "#ff7f0e", "#8c564b"};

struct Canvas {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void grow(double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
};

inline ConvexPolygon drawable_polygon(const Shape& s) {
  if (const auto* p = std::get_if<ConvexPolygon>(&s)) return *p;
  return to_polygon(std::get<HPolytope>(s));
}

inline std::string render(
    const std::vector<std::pair<std::string, Shape>>& figures) {
  Canvas box;
  for (const auto& [name, s] : figures) {
    if (dimension(s) != 2)
      throw InvalidParameter("svg rendering is planar-only");
    if (const auto* b = std::get_if<Ball>(&s)) {
      box.grow(b->center[0] - b->radius, b->center[1] - b->radius);
      box.grow(b->center[0] + b->radius, b->center[1] + b->radius);
    } else {
      const ConvexPolygon poly = drawable_polygon(s);
      for (const Vec2& v : poly.vertices()) box.grow(v.x, v.y);
    }
  }
  double span = std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  if (!(span > 0.0)) span = 1.0;
  const double pad = 0.05 * span;
  const double scale = 512.0 / (span + 2.0 * pad);
  auto tx = [&](double x) { return (x - box.min_x + pad) * scale; };
  auto ty = [&](double y) { return 512.0 - (y - box.min_y + pad) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" "
        "viewBox=\"0 0 512 512\" width=\"512\" height=\"512\">\n";
  int color = 0;
  for (const auto& [name, s] : figures) {
    const char* stroke = kPalette[color % 6];
    ++color;
    if (const auto* b = std::get_if<Ball>(&s)) {
      os << "  <circle cx=\"" << tx(b->center[0]) << "\" cy=\""
         << ty(b->center[1]) << "\" r=\"" << b->radius * scale
         << "\" fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"1.5\"><title>" << name << "</title></circle>\n";
      continue;
    }
    const ConvexPolygon poly = drawable_polygon(s);
    os << "  <polygon points=\"";
    for (const Vec2& v : poly.vertices())
      os << tx(v.x) << ',' << ty(v.y) << ' ';
    os << "\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"1.5\"><title>" << name << "</title></polygon>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kakeya::svg
