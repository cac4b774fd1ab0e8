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

#include "plusdraw/consistency.hpp"

#include <doctest.h>
#include <stdexcept>

#include "plusdraw/generator.hpp"
#include "plusdraw/graph.hpp"

namespace plusdraw {
namespace {

// Every side adjacency of `before` must survive in `after` with the same
// orientation and positive length, except `cut_pair`, which must now be a
// corner contact.
void check_adjacency_preserved(const Tiling& before, const Tiling& after,
                               const std::pair<std::string, std::string>& cut_pair) {
  for (std::size_t i = 0; i < before.rects.size(); ++i) {
    for (std::size_t j = i + 1; j < before.rects.size(); ++j) {
      const std::string& u = before.rects[i].id;
      const std::string& v = before.rects[j].id;
      const Adjacency a = classify_adjacency(before.rects[i], before.rects[j]);
      const Adjacency b = classify_adjacency(after.at(u), after.at(v));
      const bool is_cut = (std::min(u, v) == cut_pair.first &&
                           std::max(u, v) == cut_pair.second);
      if (is_cut) {
        CHECK(b.kind == AdjacencyKind::kCorner);
        continue;
      }
      if (a.kind == AdjacencyKind::kVertical ||
          a.kind == AdjacencyKind::kHorizontal) {
        CHECK(b.kind == a.kind);
        CHECK(b.hi > b.lo);
      }
    }
  }
}

TEST_CASE("single cut on the minimal staircase") {
  // Left column: s under p; right column: q under t.  (p,q) is incomparable.
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 2;
  t.by1 = 4;
  t.rects = {Rect{"s", 0, 0, 1, 1}, Rect{"p", 0, 1, 1, 4},
             Rect{"q", 1, 0, 2, 3}, Rect{"t", 1, 3, 2, 4}};
  validate_tiling(t);
  REQUIRE(incomparable_pairs(t) ==
          std::vector<std::pair<std::string, std::string>>{{"p", "q"}});

  const auto [cut, ev] = apply_cut(t, "p", "q");
  CHECK_NOTHROW(validate_tiling(cut));
  CHECK(cut.by1 == 6);
  CHECK(cut.at("s") == Rect{"s", 0, 0, 1, 3});
  CHECK(cut.at("p") == Rect{"p", 0, 3, 1, 6});
  CHECK(cut.at("q") == Rect{"q", 1, 0, 2, 3});
  CHECK(cut.at("t") == Rect{"t", 1, 3, 2, 6});
  CHECK(ev.z == Point{1, 3});
  CHECK_FALSE(ev.was_horizontal);
  CHECK(std::min(ev.excess_u, ev.excess_v) == "s");
  CHECK(std::max(ev.excess_u, ev.excess_v) == "t");
  check_adjacency_preserved(t, cut, {"p", "q"});

  const auto fcs = four_corner_points(cut);
  REQUIRE(fcs.size() == 1);
  CHECK(fcs[0].bl == "s");
  CHECK(fcs[0].tl == "p");
  CHECK(fcs[0].tr == "t");
  CHECK(fcs[0].br == "q");

  // The new diagonal is the excess pair; the cut pair stays in the map graph
  // as a corner contact.
  const Graph before_side = contact_graph(t, false);
  const Graph after_full = contact_graph(cut, true);
  CHECK(after_full.has_edge("s", "t"));
  CHECK(after_full.has_edge("p", "q"));
  CHECK_FALSE(before_side.has_edge("s", "t"));
  for (const auto& [u, v] : before_side.edges()) CHECK(after_full.has_edge(u, v));
}

TEST_CASE("horizontal and mirrored cuts reduce to the canonical one") {
  // Transposed staircase: horizontal incomparable pair.
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 4;
  t.by1 = 2;
  t.rects = {Rect{"s", 0, 0, 1, 1}, Rect{"p", 1, 0, 4, 1},
             Rect{"q", 0, 1, 3, 2}, Rect{"t", 3, 1, 4, 2}};
  validate_tiling(t);
  REQUIRE(incomparable_pairs(t).size() == 1);
  const auto [cut, ev] = apply_cut(t, "p", "q");
  CHECK_NOTHROW(validate_tiling(cut));
  CHECK(ev.was_horizontal);
  CHECK(cut.bx1 == 6);
  CHECK(four_corner_points(cut).size() == 1);
  check_adjacency_preserved(t, cut, {"p", "q"});

  // Mirrored chirality: left rect overhangs downward.
  Tiling m;
  m.bx0 = 0;
  m.by0 = 0;
  m.bx1 = 2;
  m.by1 = 4;
  m.rects = {Rect{"s", 0, 3, 1, 4}, Rect{"p", 0, 0, 1, 3},
             Rect{"q", 1, 1, 2, 4}, Rect{"t", 1, 0, 2, 1}};
  validate_tiling(m);
  REQUIRE(incomparable_pairs(m).size() == 1);
  const auto [mcut, mev] = apply_cut(m, "p", "q");
  CHECK_NOTHROW(validate_tiling(mcut));
  CHECK(four_corner_points(mcut).size() == 1);
  CHECK(std::min(mev.excess_u, mev.excess_v) == "s");
  CHECK(std::max(mev.excess_u, mev.excess_v) == "t");
  check_adjacency_preserved(m, mcut, {"p", "q"});
}

TEST_CASE("apply_cut rejects bad pairs") {
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 2;
  t.by1 = 1;
  t.rects = {Rect{"a", 0, 0, 1, 1}, Rect{"b", 1, 0, 2, 1}};
  CHECK_THROWS_AS(apply_cut(t, "a", "b"), std::invalid_argument);  // comparable
  Tiling far;
  far.bx0 = 0;
  far.by0 = 0;
  far.bx1 = 3;
  far.by1 = 1;
  far.rects = {Rect{"a", 0, 0, 1, 1}, Rect{"m", 1, 0, 2, 1},
               Rect{"b", 2, 0, 3, 1}};
  CHECK_THROWS_AS(apply_cut(far, "a", "b"), std::invalid_argument);  // apart
}

TEST_CASE("make_consistent on the windmill chain") {
  for (const int k : {1, 2, 3}) {
    const Tiling t = gen_windmill(k);
    REQUIRE(incomparable_pairs(t).size() == static_cast<std::size_t>(4 * k));
    const ConsistencyResult res = make_consistent(t, /*with_trace=*/true);
    CHECK(incomparable_pairs(res.tiling).empty());
    CHECK_NOTHROW(validate_tiling(res.tiling));
    CHECK(res.cuts.size() <= static_cast<std::size_t>(4 * k));
    CHECK(res.snapshots.size() == res.cuts.size());
    CHECK(four_corner_points(res.tiling).size() == res.cuts.size());
    // Every original side contact survives as an adjacency (side or corner).
    const Graph before = contact_graph(t, false);
    const Graph after = contact_graph(res.tiling, true);
    for (const auto& [u, v] : before.edges()) CHECK(after.has_edge(u, v));
  }
}

TEST_CASE("make_consistent on random slicing tilings") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Tiling t = gen_slicing(30, seed);
    const ConsistencyResult res = make_consistent(t);
    CHECK(incomparable_pairs(res.tiling).empty());
    CHECK_NOTHROW(validate_tiling(res.tiling));
    CHECK(four_corner_points(res.tiling).size() == res.cuts.size());
    const Graph before = contact_graph(t, false);
    const Graph after = contact_graph(res.tiling, true);
    for (const auto& [u, v] : before.edges()) CHECK(after.has_edge(u, v));
    // Each four-corner point has exactly one diagonal that was side adjacent
    // before (the cut pair) and one that was not (the excess pair).
    for (const FourCorner& fc : four_corner_points(res.tiling)) {
      const bool rising = before.has_edge(fc.bl, fc.tr);
      const bool falling = before.has_edge(fc.tl, fc.br);
      CHECK(rising != falling);
    }
  }
}

TEST_CASE("make_consistent rejects improper inputs") {
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 2;
  t.by1 = 2;
  t.rects = {Rect{"bl", 0, 0, 1, 1}, Rect{"br", 1, 0, 2, 1},
             Rect{"tl", 0, 1, 1, 2}, Rect{"tr", 1, 1, 2, 2}};
  CHECK_THROWS_AS(make_consistent(t), std::invalid_argument);
}

}  // namespace
}  // namespace plusdraw
