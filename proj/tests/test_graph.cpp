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

#include "plusdraw/graph.hpp"

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

TEST_CASE("graph basics") {
  Graph g;
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge("b", "a"));
  CHECK_FALSE(g.has_edge("a", "c"));
  CHECK(g.degree("b") == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.neighbors("b") == std::vector<std::string>{"a", "c"});
  g.remove_edge("a", "b");
  CHECK_FALSE(g.has_edge("a", "b"));
  CHECK(g.has_vertex("a"));
  CHECK_THROWS_AS(g.add_edge("x", "x"), std::invalid_argument);
}

TEST_CASE("2x2 grid contact graph: cycle without corners, K4 with them") {
  const Tiling t = grid2x2();
  const Graph side = contact_graph(t, /*include_corner=*/false);
  CHECK(side.vertex_count() == 4);
  CHECK(side.edge_count() == 4);
  CHECK(side.has_edge("bl", "br"));
  CHECK(side.has_edge("bl", "tl"));
  CHECK(side.has_edge("br", "tr"));
  CHECK(side.has_edge("tl", "tr"));
  CHECK_FALSE(side.has_edge("bl", "tr"));
  CHECK_FALSE(side.has_edge("tl", "br"));

  const Graph full = contact_graph(t, /*include_corner=*/true);
  CHECK(full.edge_count() == 6);
  CHECK(full.has_edge("bl", "tr"));
  CHECK(full.has_edge("tl", "br"));
  for (const std::string& v : full.vertices()) CHECK(full.degree(v) == 3);
}

TEST_CASE("is_rectangular_dual") {
  const Tiling t = grid2x2();
  const Graph side = contact_graph(t, false);
  CHECK_FALSE(is_rectangular_dual(t, side));  // four-corner point present

  Tiling ladder;
  ladder.bx0 = 0;
  ladder.by0 = 0;
  ladder.bx1 = 2;
  ladder.by1 = 2;
  ladder.rects = {Rect{"a", 0, 0, 1, 1}, Rect{"b", 1, 0, 2, 2},
                  Rect{"c", 0, 1, 1, 2}};
  const Graph lg = contact_graph(ladder, false);
  CHECK(is_rectangular_dual(ladder, lg));
  Graph wrong = lg;
  wrong.remove_edge("a", "b");
  CHECK_FALSE(is_rectangular_dual(ladder, wrong));
}

TEST_CASE("graph JSON round trip") {
  Graph g;
  g.add_vertex("c");
  g.add_edge("b", "a");
  const auto j = graph_to_json(g);
  CHECK(j.dump() == R"({"vertices":["c","b","a"],"edges":[["a","b"]]})");
  const Graph back = graph_from_json_text(j.dump());
  CHECK(back == g);
  CHECK_THROWS(graph_from_json_text(R"({"vertices":["a"],"edges":[["a","z"]]})"));
  CHECK_THROWS(graph_from_json_text(R"({"vertices":[1],"edges":[]})"));
  CHECK_THROWS(graph_from_json_text(R"({"edges":[]})"));
}

TEST_CASE("graph equality ignores vertex order") {
  Graph g1;
  g1.add_edge("a", "b");
  Graph g2;
  g2.add_vertex("b");
  g2.add_edge("a", "b");
  CHECK(g1 == g2);
  Graph g3;
  g3.add_edge("a", "c");
  CHECK_FALSE(g1 == g3);
}

}  // namespace
}  // namespace plusdraw
