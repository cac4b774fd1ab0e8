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

#include <algorithm>
#include <stdexcept>

namespace plusdraw {

namespace {

std::pair<std::string, std::string> norm(const std::string& u,
                                         const std::string& v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

void Graph::add_vertex(const std::string& v) {
  if (v.empty()) throw std::invalid_argument("empty vertex id");
  if (vertex_set_.insert(v).second) vertices_.push_back(v);
}

bool Graph::has_vertex(const std::string& v) const {
  return vertex_set_.count(v) != 0;
}

void Graph::add_edge(const std::string& u, const std::string& v) {
  if (u == v) throw std::invalid_argument("self loop at '" + u + "'");
  add_vertex(u);
  add_vertex(v);
  edges_.insert(norm(u, v));
}

bool Graph::has_edge(const std::string& u, const std::string& v) const {
  return edges_.count(norm(u, v)) != 0;
}

void Graph::remove_edge(const std::string& u, const std::string& v) {
  edges_.erase(norm(u, v));
}

int Graph::degree(const std::string& v) const {
  int d = 0;
  for (const auto& [a, b] : edges_) {
    if (a == v || b == v) ++d;
  }
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (const std::string& v : vertices_) best = std::max(best, degree(v));
  return best;
}

std::vector<std::string> Graph::neighbors(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_set_ == b.vertex_set_ && a.edges_ == b.edges_;
}

Graph contact_graph(const Tiling& t, bool include_corner) {
  Graph g;
  for (const Rect& r : t.rects) g.add_vertex(r.id);
  for (std::size_t i = 0; i < t.rects.size(); ++i) {
    for (std::size_t j = i + 1; j < t.rects.size(); ++j) {
      const Adjacency adj = classify_adjacency(t.rects[i], t.rects[j]);
      if (adj.kind == AdjacencyKind::kVertical ||
          adj.kind == AdjacencyKind::kHorizontal) {
        g.add_edge(t.rects[i].id, t.rects[j].id);
      }
    }
  }
  if (include_corner) {
    for (const FourCorner& fc : four_corner_points(t)) {
      g.add_edge(fc.bl, fc.tr);
      g.add_edge(fc.tl, fc.br);
    }
  }
  return g;
}

bool is_rectangular_dual(const Tiling& t, const Graph& g) {
  if (!tiling_problems(t).empty()) return false;
  if (!four_corner_points(t).empty()) return false;
  return contact_graph(t, /*include_corner=*/false) == g;
}

bool is_subgraph(const Graph& g, const Graph& h) {
  for (const auto& [u, v] : g.edges()) {
    if (!h.has_edge(u, v)) return false;
  }
  return true;
}

std::vector<ExcessPair> excess_pairs(const Tiling& t, const Graph& g) {
  std::vector<ExcessPair> out;
  for (const FourCorner& fc : four_corner_points(t)) {
    const bool up = g.has_edge(fc.bl, fc.tr);    // rising diagonal
    const bool down = g.has_edge(fc.tl, fc.br);  // falling diagonal
    if (up == down) {
      throw std::runtime_error(
          "four-corner point at (" + std::to_string(fc.z.x) + "," +
          std::to_string(fc.z.y) + ") has " + (up ? "both" : "neither") +
          " diagonal adjacencies in the graph");
    }
    ExcessPair ep;
    ep.z = fc.z;
    if (down) {
      // (bl,tr) is the excess diagonal; consumer is the upper rect of the
      // present diagonal (tl,br).
      ep.a = fc.bl;
      ep.b = fc.tr;
      ep.p = fc.tl;
      ep.q = fc.br;
    } else {
      ep.a = fc.tl;
      ep.b = fc.br;
      ep.p = fc.tr;
      ep.q = fc.bl;
    }
    out.push_back(std::move(ep));
  }
  return out;
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) {
    j["edges"].push_back({u, v});
  }
  return j;
}

Graph graph_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::runtime_error(
        "graph JSON must be an object with 'vertices' and 'edges'");
  }
  Graph g;
  if (!j["vertices"].is_array()) {
    throw std::runtime_error("'vertices' must be an array of strings");
  }
  for (const auto& jv : j["vertices"]) {
    if (!jv.is_string()) {
      throw std::runtime_error("'vertices' must be an array of strings");
    }
    g.add_vertex(jv.get<std::string>());
  }
  if (!j["edges"].is_array()) {
    throw std::runtime_error("'edges' must be an array of string pairs");
  }
  for (const auto& je : j["edges"]) {
    if (!je.is_array() || je.size() != 2 || !je[0].is_string() ||
        !je[1].is_string()) {
      throw std::runtime_error("'edges' must be an array of string pairs");
    }
    const std::string u = je[0].get<std::string>();
    const std::string v = je[1].get<std::string>();
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
      throw std::runtime_error("edge endpoint not in 'vertices': " + u + "," +
                               v);
    }
    g.add_edge(u, v);
  }
  return g;
}

Graph graph_from_json_text(const std::string& text) {
  return graph_from_json(
      nlohmann::ordered_json::parse(text, nullptr, /*allow_exceptions=*/true));
}

}  // namespace plusdraw
