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

#include "plusdraw/tiling.hpp"

#include <doctest.h>
#include <stdexcept>

namespace plusdraw {
namespace {

Tiling grid2x2() {
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 2;
  t.by1 = 2;
  t.rects = {Rect{"bl", 0, 0, 1, 1}, Rect{"br", 1, 0, 2, 1},
             Rect{"tl", 0, 1, 1, 2}, Rect{"tr", 1, 1, 2, 2}};
  return t;
}

TEST_CASE("validate accepts a 2x2 grid") {
  CHECK(tiling_problems(grid2x2()).empty());
  CHECK_NOTHROW(validate_tiling(grid2x2()));
}

TEST_CASE("validate rejects broken tilings") {
  Tiling t = grid2x2();
  t.rects[0].x1 = 2;  // overlaps br
  CHECK_FALSE(tiling_problems(t).empty());
  CHECK_THROWS_AS(validate_tiling(t), std::runtime_error);

  Tiling gap = grid2x2();
  gap.rects.pop_back();
  CHECK_FALSE(tiling_problems(gap).empty());

  Tiling dup = grid2x2();
  dup.rects[1].id = "bl";
  CHECK_FALSE(tiling_problems(dup).empty());

  Tiling outside = grid2x2();
  outside.rects[3] = Rect{"tr", 1, 1, 3, 2};
  CHECK_FALSE(tiling_problems(outside).empty());
}

TEST_CASE("adjacency classification") {
  // Vertical contact, incomparable: neither y-interval contains the other.
  const Rect a{"a", 0, 0, 2, 3};
  const Rect b{"b", 2, 1, 4, 4};
  const Adjacency v = classify_adjacency(a, b);
  CHECK(v.kind == AdjacencyKind::kVertical);
  CHECK(v.line == 2);
  CHECK(v.lo == 1);
  CHECK(v.hi == 3);
  CHECK_FALSE(v.comparable);

  // Vertical, comparable (b2 contained in a's span).
  const Rect b2{"b2", 2, 1, 4, 2};
  const Adjacency v2 = classify_adjacency(a, b2);
  CHECK(v2.kind == AdjacencyKind::kVertical);
  CHECK(v2.comparable);

  // Horizontal contact.
  const Rect c{"c", 0, 3, 2, 5};
  const Adjacency hz = classify_adjacency(a, c);
  CHECK(hz.kind == AdjacencyKind::kHorizontal);
  CHECK(hz.line == 3);
  CHECK(hz.comparable);  // equal x-intervals

  // Corner contact.
  const Rect d{"d", 2, 3, 4, 5};
  const Adjacency corner = classify_adjacency(a, d);
  CHECK(corner.kind == AdjacencyKind::kCorner);
  CHECK(corner.corner == Point{2, 3});

  // No contact.
  const Rect e{"e", 5, 5, 6, 6};
  CHECK(classify_adjacency(a, e).kind == AdjacencyKind::kNone);

  // Overlap must throw.
  const Rect f{"f", 1, 1, 3, 2};
  CHECK_THROWS_AS(classify_adjacency(a, f), std::invalid_argument);
}

TEST_CASE("containment helpers") {
  const Rect a{"a", 0, 0, 4, 4};
  const Rect b{"b", 1, 0, 3, 2};
  CHECK(contained_x(b, a));
  CHECK(properly_contained_x(b, a));
  CHECK_FALSE(contained_x(a, b));
  const Rect c{"c", 0, 2, 4, 3};
  CHECK(contained_x(c, a));
  CHECK_FALSE(properly_contained_x(c, a));  // equal x-interval
  CHECK(contained_y(c, a));
  CHECK(properly_contained_y(c, a));
}

TEST_CASE("four-corner points on the 2x2 grid") {
  const auto fcs = four_corner_points(grid2x2());
  REQUIRE(fcs.size() == 1);
  CHECK(fcs[0].z == Point{1, 1});
  CHECK(fcs[0].bl == "bl");
  CHECK(fcs[0].tl == "tl");
  CHECK(fcs[0].tr == "tr");
  CHECK(fcs[0].br == "br");
}

TEST_CASE("T junctions are not four-corner points") {
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 2;
  t.by1 = 2;
  t.rects = {Rect{"a", 0, 0, 1, 1}, Rect{"b", 1, 0, 2, 1},
             Rect{"c", 0, 1, 2, 2}};
  CHECK(four_corner_points(t).empty());
}

TEST_CASE("classic five-rect pinwheel has four-corner-free interior") {
  // Four rects spiral around a center square; all adjacencies comparable.
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 4;
  t.by1 = 4;
  t.rects = {Rect{"a", 0, 0, 3, 1}, Rect{"b", 3, 0, 4, 3},
             Rect{"c", 1, 3, 4, 4}, Rect{"d", 0, 1, 1, 4},
             Rect{"m", 1, 1, 3, 3}};
  CHECK(tiling_problems(t).empty());
  CHECK(four_corner_points(t).empty());
  CHECK(incomparable_pairs(t).empty());
}

TEST_CASE("offset ladder has the expected incomparable pairs") {
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 2;
  t.by1 = 5;
  t.rects = {Rect{"l1", 0, 0, 1, 2}, Rect{"l2", 0, 2, 1, 4},
             Rect{"l3", 0, 4, 1, 5}, Rect{"r1", 1, 0, 2, 3},
             Rect{"r2", 1, 3, 2, 5}};
  const auto pairs = incomparable_pairs(t);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<std::string, std::string>("l2", "r1"));
  CHECK(pairs[1] == std::pair<std::string, std::string>("l2", "r2"));
}

TEST_CASE("tiling JSON round trip") {
  const Tiling t = grid2x2();
  const auto j = tiling_to_json(t);
  const std::string text = j.dump();
  CHECK(text ==
        R"({"bounds":[0,0,2,2],"rects":[{"id":"bl","box":[0,0,1,1]},)"
        R"({"id":"br","box":[1,0,2,1]},{"id":"tl","box":[0,1,1,2]},)"
        R"({"id":"tr","box":[1,1,2,2]}]})");
  const Tiling back = tiling_from_json_text(text);
  CHECK(back.rects == t.rects);
  CHECK(back.bx1 == 2);
  CHECK_THROWS(tiling_from_json_text("{\"bounds\":[0,0,1]}"));
  CHECK_THROWS(tiling_from_json_text("{\"bounds\":[0,0,1,1],\"rects\":[{}]}"));
  CHECK_THROWS(tiling_from_json_text("[]"));
}

}  // namespace
}  // namespace plusdraw
