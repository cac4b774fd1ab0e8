// Copyright 2026 The Plusdraw Authors
//
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

#ifndef PLUSDRAW_TILING_HPP_
#define PLUSDRAW_TILING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "plusdraw/geometry.hpp"

namespace plusdraw {

// ---------------------------------------------------------------------------
// Axis-aligned rectangle tilings with exact integer coordinates.
// ---------------------------------------------------------------------------

struct Rect {
  std::string id;
  std::int64_t x0 = 0;  // left   (x0 < x1)
  std::int64_t y0 = 0;  // bottom (y0 < y1)
  std::int64_t x1 = 0;  // right
  std::int64_t y1 = 0;  // top

  std::int64_t width() const { return x1 - x0; }
  std::int64_t height() const { return y1 - y0; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Interval containment in a single coordinate: [a.x0,a.x1] within [b.x0,b.x1].
bool contained_x(const Rect& a, const Rect& b);
bool properly_contained_x(const Rect& a, const Rect& b);  // contained, not equal
bool contained_y(const Rect& a, const Rect& b);
bool properly_contained_y(const Rect& a, const Rect& b);

struct Tiling {
  std::int64_t bx0 = 0, by0 = 0, bx1 = 0, by1 = 0;  // bounding rectangle
  std::vector<Rect> rects;

  // Index of the rect with this id, or -1.
  int find(const std::string& id) const;
  const Rect& at(const std::string& id) const;  // throws if missing
  Rect& at(const std::string& id);
};

// All structural problems, empty when the tiling is a valid rectangle tiling
// of its bounds: positive-area rects inside the bounds, unique non-empty ids,
// pairwise disjoint interiors, union covering the bounds exactly.
// Coordinates must stay within +/-2^30 so all derived arithmetic is exact.
std::vector<std::string> tiling_problems(const Tiling& t);
// Throws std::runtime_error listing every problem; no-op when valid.
void validate_tiling(const Tiling& t);

// ---------------------------------------------------------------------------
// Adjacency between two rects of a valid tiling.
// ---------------------------------------------------------------------------

enum class AdjacencyKind { kNone, kCorner, kVertical, kHorizontal };

struct Adjacency {
  AdjacencyKind kind = AdjacencyKind::kNone;
  // kVertical: contact on the line x == line, shared segment [lo,hi] in y.
  // kHorizontal: contact on the line y == line, shared segment [lo,hi] in x.
  std::int64_t line = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Point corner;  // kCorner: the single shared point
  // For side contacts: true when the shared segment is the full side of at
  // least one of the two rects (equivalently, one rect's interval in the
  // relevant coordinate contains the other's).
  bool comparable = false;
};

// Throws std::invalid_argument if the interiors overlap.
Adjacency classify_adjacency(const Rect& a, const Rect& b);

// Side-adjacent pairs whose shared segment is a full side of neither rect,
// each as (min id, max id), sorted lexicographically.
std::vector<std::pair<std::string, std::string>> incomparable_pairs(
    const Tiling& t);

// ---------------------------------------------------------------------------
// Points where four rects meet.
// ---------------------------------------------------------------------------

// The four rects around such a point, clockwise from bottom-left.
struct FourCorner {
  Point z;
  std::string bl;  // z is this rect's top-right corner
  std::string tl;  // ... bottom-right corner
  std::string tr;  // ... bottom-left corner
  std::string br;  // ... top-left corner
};

// Sorted by (z.y, z.x).
std::vector<FourCorner> four_corner_points(const Tiling& t);

// ---------------------------------------------------------------------------
// JSON round trip:  {"bounds":[x0,y0,x1,y1],
//                    "rects":[{"id":"a","box":[x0,y0,x1,y1]},...]}
// ---------------------------------------------------------------------------

nlohmann::ordered_json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::ordered_json& j);
Tiling tiling_from_json_text(const std::string& text);

}  // namespace plusdraw

#endif  // PLUSDRAW_TILING_HPP_
