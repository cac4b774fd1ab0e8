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

#ifndef PLUSDRAW_GEOMETRY_HPP_
#define PLUSDRAW_GEOMETRY_HPP_

#include <cstdint>
#include <string>

namespace plusdraw {

// ---------------------------------------------------------------------------
// Compass directions.  N=0, E=1, S=2, W=3 in clockwise order; screen
// convention is mathematical (y grows upward), so N means +y.
// ---------------------------------------------------------------------------

enum class Dir : int { N = 0, E = 1, S = 2, W = 3 };

inline int dir_index(Dir d) { return static_cast<int>(d); }
inline Dir dir_from_index(int i) { return static_cast<Dir>(((i % 4) + 4) % 4); }
inline Dir opposite(Dir d) { return dir_from_index(dir_index(d) + 2); }
inline Dir clockwise(Dir d) { return dir_from_index(dir_index(d) + 1); }
inline Dir counter_clockwise(Dir d) { return dir_from_index(dir_index(d) - 1); }
inline bool is_horizontal(Dir d) { return d == Dir::E || d == Dir::W; }
inline bool is_vertical(Dir d) { return d == Dir::N || d == Dir::S; }
inline std::int64_t dir_dx(Dir d) {
  return d == Dir::E ? 1 : (d == Dir::W ? -1 : 0);
}
inline std::int64_t dir_dy(Dir d) {
  return d == Dir::N ? 1 : (d == Dir::S ? -1 : 0);
}
char dir_char(Dir d);
std::string dir_name(Dir d);
// Parses "N"/"E"/"S"/"W" (case-insensitive); throws std::invalid_argument.
Dir dir_parse(const std::string& s);

// ---------------------------------------------------------------------------
// Exact integer points and axis-parallel segments.
// ---------------------------------------------------------------------------

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

Point translated(Point p, Dir d, std::int64_t steps);

// Axis-parallel segment.  Degenerate segments (a == b) are allowed and behave
// as single points; they arise from pluses whose arms on one axis both have
// length zero.
struct Segment {
  Point a;
  Point b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

bool segment_is_axis_parallel(const Segment& s);
bool segment_is_degenerate(const Segment& s);
bool segment_is_horizontal(const Segment& s);  // degenerate counts as both
bool segment_is_vertical(const Segment& s);

// True if p lies on s (endpoints included).
bool on_segment(const Point& p, const Segment& s);
// True if p lies on s and is not an endpoint of s.
bool strictly_inside_segment(const Point& p, const Segment& s);
bool is_endpoint(const Point& p, const Segment& s);

// Exact intersection of two axis-parallel segments.
struct SegmentHit {
  enum class Kind { kNone, kPoint, kOverlap };
  Kind kind = Kind::kNone;
  Point point;      // valid when kind == kPoint
  Segment overlap;  // valid when kind == kOverlap (positive length)
};

SegmentHit hit_segments(const Segment& s, const Segment& t);

}  // namespace plusdraw

#endif  // PLUSDRAW_GEOMETRY_HPP_
