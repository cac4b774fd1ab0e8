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

#include "plusdraw/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace plusdraw {

char dir_char(Dir d) {
  switch (d) {
    case Dir::N: return 'N';
    case Dir::E: return 'E';
    case Dir::S: return 'S';
    case Dir::W: return 'W';
  }
  return '?';
}

std::string dir_name(Dir d) { return std::string(1, dir_char(d)); }

Dir dir_parse(const std::string& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'N': return Dir::N;
      case 'E': return Dir::E;
      case 'S': return Dir::S;
      case 'W': return Dir::W;
      default: break;
    }
  }
  throw std::invalid_argument("not a compass direction: '" + s + "'");
}

Point translated(Point p, Dir d, std::int64_t steps) {
  return Point{p.x + dir_dx(d) * steps, p.y + dir_dy(d) * steps};
}

bool segment_is_degenerate(const Segment& s) { return s.a == s.b; }

bool segment_is_axis_parallel(const Segment& s) {
  return s.a.x == s.b.x || s.a.y == s.b.y;
}

bool segment_is_horizontal(const Segment& s) { return s.a.y == s.b.y; }

bool segment_is_vertical(const Segment& s) { return s.a.x == s.b.x; }

bool on_segment(const Point& p, const Segment& s) {
  if (!segment_is_axis_parallel(s)) return false;
  const auto [xlo, xhi] = std::minmax(s.a.x, s.b.x);
  const auto [ylo, yhi] = std::minmax(s.a.y, s.b.y);
  return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi &&
         (s.a.x == s.b.x ? p.x == s.a.x : p.y == s.a.y);
}

bool is_endpoint(const Point& p, const Segment& s) {
  return p == s.a || p == s.b;
}

bool strictly_inside_segment(const Point& p, const Segment& s) {
  return on_segment(p, s) && !is_endpoint(p, s);
}

namespace {

// Overlap of two collinear 1-d intervals; both inputs are unordered pairs.
SegmentHit collinear_hit(std::int64_t fixed, bool horizontal, std::int64_t a0,
                         std::int64_t a1, std::int64_t b0, std::int64_t b1) {
  const auto [alo, ahi] = std::minmax(a0, a1);
  const auto [blo, bhi] = std::minmax(b0, b1);
  const std::int64_t lo = std::max(alo, blo);
  const std::int64_t hi = std::min(ahi, bhi);
  SegmentHit hit;
  if (lo > hi) return hit;
  auto mk = [&](std::int64_t v) {
    return horizontal ? Point{v, fixed} : Point{fixed, v};
  };
  if (lo == hi) {
    hit.kind = SegmentHit::Kind::kPoint;
    hit.point = mk(lo);
  } else {
    hit.kind = SegmentHit::Kind::kOverlap;
    hit.overlap = Segment{mk(lo), mk(hi)};
  }
  return hit;
}

}  // namespace

SegmentHit hit_segments(const Segment& s, const Segment& t) {
  SegmentHit hit;
  if (segment_is_degenerate(s)) {
    if (on_segment(s.a, t)) {
      hit.kind = SegmentHit::Kind::kPoint;
      hit.point = s.a;
    }
    return hit;
  }
  if (segment_is_degenerate(t)) {
    if (on_segment(t.a, s)) {
      hit.kind = SegmentHit::Kind::kPoint;
      hit.point = t.a;
    }
    return hit;
  }
  const bool sh = segment_is_horizontal(s);
  const bool th = segment_is_horizontal(t);
  if (sh && th) {
    if (s.a.y != t.a.y) return hit;
    return collinear_hit(s.a.y, /*horizontal=*/true, s.a.x, s.b.x, t.a.x,
                         t.b.x);
  }
  if (!sh && !th) {
    if (s.a.x != t.a.x) return hit;
    return collinear_hit(s.a.x, /*horizontal=*/false, s.a.y, s.b.y, t.a.y,
                         t.b.y);
  }
  const Segment& h = sh ? s : t;
  const Segment& v = sh ? t : s;
  const Point cross{v.a.x, h.a.y};
  if (on_segment(cross, h) && on_segment(cross, v)) {
    hit.kind = SegmentHit::Kind::kPoint;
    hit.point = cross;
  }
  return hit;
}

}  // namespace plusdraw
