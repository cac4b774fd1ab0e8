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

#include <doctest.h>
#include <stdexcept>

#include "plusdraw/rng.hpp"

namespace plusdraw {
namespace {

TEST_CASE("compass directions") {
  CHECK(opposite(Dir::N) == Dir::S);
  CHECK(opposite(Dir::E) == Dir::W);
  CHECK(clockwise(Dir::N) == Dir::E);
  CHECK(clockwise(Dir::W) == Dir::N);
  CHECK(counter_clockwise(Dir::N) == Dir::W);
  CHECK(counter_clockwise(Dir::E) == Dir::N);
  CHECK(is_horizontal(Dir::E));
  CHECK(is_vertical(Dir::S));
  CHECK(dir_dx(Dir::E) == 1);
  CHECK(dir_dy(Dir::S) == -1);
  CHECK(dir_parse("N") == Dir::N);
  CHECK(dir_parse("w") == Dir::W);
  CHECK_THROWS_AS(dir_parse("Q"), std::invalid_argument);
  CHECK(dir_name(Dir::E) == "E");
  CHECK(translated(Point{2, 3}, Dir::N, 4) == Point{2, 7});
  CHECK(translated(Point{2, 3}, Dir::W, 1) == Point{1, 3});
}

TEST_CASE("point on segment") {
  const Segment h{{0, 0}, {4, 0}};
  CHECK(on_segment(Point{0, 0}, h));
  CHECK(on_segment(Point{4, 0}, h));
  CHECK(on_segment(Point{2, 0}, h));
  CHECK_FALSE(on_segment(Point{5, 0}, h));
  CHECK_FALSE(on_segment(Point{2, 1}, h));
  CHECK(strictly_inside_segment(Point{2, 0}, h));
  CHECK_FALSE(strictly_inside_segment(Point{0, 0}, h));
  const Segment d{{3, 3}, {3, 3}};
  CHECK(on_segment(Point{3, 3}, d));
  CHECK_FALSE(strictly_inside_segment(Point{3, 3}, d));
  CHECK(segment_is_degenerate(d));
  CHECK(segment_is_horizontal(d));
  CHECK(segment_is_vertical(d));
}

TEST_CASE("perpendicular segment hits") {
  const Segment h{{0, 2}, {6, 2}};
  const Segment v{{3, 0}, {3, 5}};
  const SegmentHit hit = hit_segments(h, v);
  REQUIRE(hit.kind == SegmentHit::Kind::kPoint);
  CHECK(hit.point == Point{3, 2});
  // Touch at an endpoint of the vertical segment.
  const Segment v2{{4, 2}, {4, 9}};
  const SegmentHit hit2 = hit_segments(h, v2);
  REQUIRE(hit2.kind == SegmentHit::Kind::kPoint);
  CHECK(hit2.point == Point{4, 2});
  // Disjoint.
  const Segment v3{{9, 0}, {9, 5}};
  CHECK(hit_segments(h, v3).kind == SegmentHit::Kind::kNone);
  const Segment v4{{3, 3}, {3, 9}};
  CHECK(hit_segments(h, v4).kind == SegmentHit::Kind::kNone);
}

TEST_CASE("collinear segment hits") {
  const Segment a{{0, 1}, {4, 1}};
  const Segment b{{4, 1}, {7, 1}};
  const SegmentHit touch = hit_segments(a, b);
  REQUIRE(touch.kind == SegmentHit::Kind::kPoint);
  CHECK(touch.point == Point{4, 1});

  const Segment c{{3, 1}, {9, 1}};
  const SegmentHit over = hit_segments(a, c);
  REQUIRE(over.kind == SegmentHit::Kind::kOverlap);
  CHECK(over.overlap == Segment{{3, 1}, {4, 1}});

  const Segment far{{5, 1}, {9, 1}};
  CHECK(hit_segments(a, far).kind == SegmentHit::Kind::kNone);

  const Segment other_row{{0, 2}, {4, 2}};
  CHECK(hit_segments(a, other_row).kind == SegmentHit::Kind::kNone);

  const Segment va{{2, 0}, {2, 4}};
  const Segment vb{{2, 4}, {2, 6}};
  const SegmentHit vtouch = hit_segments(va, vb);
  REQUIRE(vtouch.kind == SegmentHit::Kind::kPoint);
  CHECK(vtouch.point == Point{2, 4});
}

TEST_CASE("degenerate segment hits") {
  const Segment d{{2, 2}, {2, 2}};
  const Segment h{{0, 2}, {5, 2}};
  const SegmentHit hit = hit_segments(d, h);
  REQUIRE(hit.kind == SegmentHit::Kind::kPoint);
  CHECK(hit.point == Point{2, 2});
  CHECK(hit_segments(h, d).kind == SegmentHit::Kind::kPoint);
  const Segment d2{{9, 9}, {9, 9}};
  CHECK(hit_segments(d, d2).kind == SegmentHit::Kind::kNone);
  CHECK(hit_segments(d, Segment{{2, 2}, {2, 2}}).kind ==
        SegmentHit::Kind::kPoint);
}

TEST_CASE("deterministic rng") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t v = c.next_in_range(-3, 9);
    CHECK(v >= -3);
    CHECK(v <= 9);
  }
  // Fixed first draw, pinned so accidental algorithm changes are caught.
  Rng d(1);
  CHECK(d.next_u64() == 0x910a2dec89025cc1ULL);
}

}  // namespace
}  // namespace plusdraw
