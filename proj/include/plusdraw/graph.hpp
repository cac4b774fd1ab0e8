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

#ifndef PLUSDRAW_GRAPH_HPP_
#define PLUSDRAW_GRAPH_HPP_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plusdraw/tiling.hpp"

namespace plusdraw {

// Simple undirected graph over string vertex ids.  Edges are stored
// normalized as (min id, max id); vertex insertion order is preserved for
// deterministic serialization.
class Graph {
 public:
  Graph() = default;

  void add_vertex(const std::string& v);
  bool has_vertex(const std::string& v) const;
  // Adds both endpoints as vertices if absent; self loops are rejected.
  void add_edge(const std::string& u, const std::string& v);
  bool has_edge(const std::string& u, const std::string& v) const;
  void remove_edge(const std::string& u, const std::string& v);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::set<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  int degree(const std::string& v) const;
  int max_degree() const;
  // Neighbors in lexicographic order.
  std::vector<std::string> neighbors(const std::string& v) const;

  // Same vertex set and same edge set (vertex order ignored).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertices_;
  std::set<std::string> vertex_set_;
  std::set<std::pair<std::string, std::string>> edges_;
};

// Contact graph of a valid tiling: one vertex per rect, one edge per pair
// sharing a positive-length boundary segment.  With include_corner, the two
// diagonal pairs at every four-corner point are edges as well.
Graph contact_graph(const Tiling& t, bool include_corner);

// True when t is a valid tiling with no four-corner points whose side-contact
// graph equals g.
bool is_rectangular_dual(const Tiling& t, const Graph& g);

// True iff every edge of g is an edge of h.
bool is_subgraph(const Graph& g, const Graph& h);

// One per four-corner point: the diagonal pair (a,b) whose adjacency is
// absent from the input graph, and the other diagonal (p,q) whose adjacency
// is present, with p the upper of the two.  The cyclic sequence a,p,b,q walks
// the four rects around z clockwise.
struct ExcessPair {
  std::string a, b;  // excess diagonal (edge not in the graph)
  std::string p;     // consumer: upper rect of the present diagonal
  std::string q;     // fourth rect (lower end of the present diagonal)
  Point z;           // the four-corner point
};

// Excess pairs of a consistent tiling against graph g, in four-corner order
// (by z.y then z.x).  Throws std::runtime_error if at some four-corner point
// both or neither diagonal adjacency is an edge of g.
std::vector<ExcessPair> excess_pairs(const Tiling& t, const Graph& g);

// JSON round trip: {"vertices":["a",...],"edges":[["a","b"],...]}
// Edges serialize normalized and sorted.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::ordered_json& j);
Graph graph_from_json_text(const std::string& text);

}  // namespace plusdraw

#endif  // PLUSDRAW_GRAPH_HPP_
