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

#include "plusdraw/shaperep.hpp"

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plusdraw {

namespace {

// Clockwise sweep in degrees from direction `from` to direction `to`,
// with a full turn (0) reported as 360.
int clockwise_sweep_degrees(Dir from, Dir to) {
  // Dir indices run clockwise (N=0, E=1, S=2, W=3), 90 degrees apart.
  int steps = ((dir_index(to) - dir_index(from)) % 4 + 4) % 4;
  return steps == 0 ? 360 : steps * 90;
}

}  // namespace

int ShapeVertex::degree() const {
  int d = 0;
  for (int e : out) d += (e >= 0) ? 1 : 0;
  return d;
}

int ShapeRep::find(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

int ShapeRep::add_vertex(const std::string& id) {
  if (find(id) >= 0) {
    throw std::runtime_error("shape vertex id repeated: " + id);
  }
  vertices.push_back(ShapeVertex{id, {-1, -1, -1, -1}});
  return static_cast<int>(vertices.size()) - 1;
}

int ShapeRep::add_edge(int u, int v, Dir dir_uv) {
  if (u < 0 || v < 0 || u >= static_cast<int>(vertices.size()) ||
      v >= static_cast<int>(vertices.size()) || u == v) {
    throw std::runtime_error("shape edge endpoints invalid");
  }
  if (vertices[u].out[dir_index(dir_uv)] >= 0) {
    throw std::runtime_error("direction " + dir_name(dir_uv) +
                             " already used at vertex " + vertices[u].id);
  }
  if (vertices[v].out[dir_index(opposite(dir_uv))] >= 0) {
    throw std::runtime_error("direction " + dir_name(opposite(dir_uv)) +
                             " already used at vertex " + vertices[v].id);
  }
  int e = static_cast<int>(edges.size());
  edges.push_back(ShapeEdge{u, v, dir_uv});
  vertices[u].out[dir_index(dir_uv)] = e;
  vertices[v].out[dir_index(opposite(dir_uv))] = e;
  return e;
}

std::vector<ShapeFace> trace_faces(const ShapeRep& rep) {
  // Directed edge 2*e is u->v, 2*e+1 is v->u.
  const int m = static_cast<int>(rep.edges.size());
  std::vector<char> seen(static_cast<std::size_t>(2 * m), 0);
  std::vector<ShapeFace> faces;
  for (int start = 0; start < 2 * m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ShapeFace face;
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      face.edge_seq.push_back(cur);
      const ShapeEdge& e = rep.edges[static_cast<std::size_t>(cur / 2)];
      const bool forward = (cur % 2) == 0;
      const int head = forward ? e.v : e.u;
      const Dir travel = forward ? e.dir : opposite(e.dir);
      // Leave along the first direction clockwise from the reversed entry
      // (exclusive), wrapping all the way back to the reversal itself at a
      // degree-1 tip.
      const Dir back = opposite(travel);
      Dir leave = back;
      for (int k = 1; k <= 4; ++k) {
        Dir cand = dir_from_index(dir_index(back) + k);
        if (rep.vertices[static_cast<std::size_t>(head)]
                .out[dir_index(cand)] >= 0) {
          leave = cand;
          break;
        }
      }
      face.turn_sum += 2 - clockwise_sweep_degrees(back, leave) / 90;
      const int next_edge =
          rep.vertices[static_cast<std::size_t>(head)].out[dir_index(leave)];
      const ShapeEdge& ne = rep.edges[static_cast<std::size_t>(next_edge)];
      cur = 2 * next_edge + (ne.u == head ? 0 : 1);
    }
    if (cur != start) {
      // A directed walk can only re-enter at its start; anything else means
      // the out tables are corrupt.
      throw std::runtime_error("face walk did not close at its start");
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::string embedding_problem(const ShapeRep& rep) {
  const int n = static_cast<int>(rep.vertices.size());
  const int m = static_cast<int>(rep.edges.size());
  if (n == 0) return "no vertices";
  for (int i = 0; i < m; ++i) {
    const ShapeEdge& e = rep.edges[static_cast<std::size_t>(i)];
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      return "edge " + std::to_string(i) + " has invalid endpoints";
    }
    if (rep.vertices[static_cast<std::size_t>(e.u)].out[dir_index(e.dir)] !=
            i ||
        rep.vertices[static_cast<std::size_t>(e.v)]
                .out[dir_index(opposite(e.dir))] != i) {
      return "edge " + std::to_string(i) + " not mirrored in vertex tables";
    }
  }
  for (int v = 0; v < n; ++v) {
    const ShapeVertex& vert = rep.vertices[static_cast<std::size_t>(v)];
    for (int d = 0; d < 4; ++d) {
      int e = vert.out[static_cast<std::size_t>(d)];
      if (e < 0) continue;
      if (e >= m) return "vertex " + vert.id + " points at a missing edge";
      const ShapeEdge& edge = rep.edges[static_cast<std::size_t>(e)];
      const bool here_u = edge.u == v && dir_index(edge.dir) == d;
      const bool here_v = edge.v == v && dir_index(opposite(edge.dir)) == d;
      if (!here_u && !here_v) {
        return "vertex " + vert.id + " direction " +
               dir_name(dir_from_index(d)) + " mismatched";
      }
    }
  }
  // Connectivity over undirected edges.
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {0};
  reached[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d = 0; d < 4; ++d) {
      int e = rep.vertices[static_cast<std::size_t>(v)]
                  .out[static_cast<std::size_t>(d)];
      if (e < 0) continue;
      const ShapeEdge& edge = rep.edges[static_cast<std::size_t>(e)];
      int w = edge.u == v ? edge.v : edge.u;
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!reached[static_cast<std::size_t>(v)]) {
      return "graph is disconnected (vertex " +
             rep.vertices[static_cast<std::size_t>(v)].id + " unreached)";
    }
  }
  std::vector<ShapeFace> faces = trace_faces(rep);
  const int f = static_cast<int>(faces.size());
  if (n - m + f != 2) {
    return "Euler relation violated: V=" + std::to_string(n) +
           " E=" + std::to_string(m) + " F=" + std::to_string(f);
  }
  int outer = 0;
  for (const ShapeFace& face : faces) {
    if (face.turn_sum == -4) {
      ++outer;
    } else if (face.turn_sum != 4) {
      return "face with turn sum " + std::to_string(face.turn_sum);
    }
  }
  if (outer != 1) {
    return "expected exactly one outer face, found " + std::to_string(outer);
  }
  return "";
}

ShapeRep shape_of_skeleton(const Skeleton& s) {
  ShapeRep rep;
  // add_vertex rescans for duplicates, which is too slow here; ids are unique
  // by construction, so vertices are appended directly.
  auto new_vertex = [&rep](std::string id) {
    rep.vertices.push_back(ShapeVertex{std::move(id), {-1, -1, -1, -1}});
    return static_cast<int>(rep.vertices.size()) - 1;
  };
  std::map<std::string, int> plus_index;
  for (std::size_t i = 0; i < s.pluses.size(); ++i) {
    if (!plus_index.emplace(s.pluses[i].id, static_cast<int>(i)).second) {
      throw std::runtime_error("plus id repeated: " + s.pluses[i].id);
    }
  }
  // Centers and per-arm slot vertices.
  std::vector<int> center(s.pluses.size(), -1);
  std::vector<std::array<std::vector<int>, 4>> arm_slot_vertex(
      s.pluses.size());
  for (std::size_t pi = 0; pi < s.pluses.size(); ++pi) {
    const PlusSkeleton& p = s.pluses[pi];
    center[pi] = new_vertex(p.id);
    for (int d = 0; d < 4; ++d) {
      const Arm& arm = p.arms[static_cast<std::size_t>(d)];
      const Dir dir = dir_from_index(d);
      for (std::size_t si = 0; si < arm.slots.size(); ++si) {
        if (is_horizontal(arm.slots[si].flank) == is_horizontal(dir)) {
          throw std::runtime_error("slot flank parallel to arm " + p.id + "." +
                                   dir_name(dir));
        }
        arm_slot_vertex[pi][static_cast<std::size_t>(d)].push_back(new_vertex(
            p.id + "." + std::string(1, dir_char(dir)) + std::to_string(si)));
      }
    }
  }
  // Merge vertices (one per meeting point that still has attached cords).
  std::vector<int> merge_vertex(s.merges.size(), -1);
  for (std::size_t mi = 0; mi < s.merges.size(); ++mi) {
    if (s.merges[mi].attached_count() > 0) {
      merge_vertex[mi] = new_vertex("z" + std::to_string(mi));
    }
  }
  // Tip-meet vertices, shared by the two facing arms.
  std::map<std::pair<std::pair<std::string, int>, std::pair<std::string, int>>,
           int>
      meet_vertex;
  auto meet_key = [](const std::string& r1, Dir a1, const std::string& r2,
                     Dir a2) {
    auto p1 = std::make_pair(r1, dir_index(a1));
    auto p2 = std::make_pair(r2, dir_index(a2));
    return p1 < p2 ? std::make_pair(p1, p2) : std::make_pair(p2, p1);
  };
  // Wire the arm chains.
  for (std::size_t pi = 0; pi < s.pluses.size(); ++pi) {
    const PlusSkeleton& p = s.pluses[pi];
    for (int d = 0; d < 4; ++d) {
      const Arm& arm = p.arms[static_cast<std::size_t>(d)];
      const Dir dir = dir_from_index(d);
      int prev = center[pi];
      for (std::size_t si = 0; si < arm.slots.size(); ++si) {
        int v = arm_slot_vertex[pi][static_cast<std::size_t>(d)][si];
        rep.add_edge(prev, v, dir);
        prev = v;
      }
      switch (arm.tip.kind) {
        case Tip::Kind::kFree: {
          int tip = new_vertex(p.id + "." + std::string(1, dir_char(dir)) +
                               "t");
          rep.add_edge(prev, tip, dir);
          break;
        }
        case Tip::Kind::kExtend: {
          auto host = plus_index.find(arm.tip.other);
          if (host == plus_index.end()) {
            throw std::runtime_error("extension host unknown: " +
                                     arm.tip.other);
          }
          const auto& hosted =
              arm_slot_vertex[static_cast<std::size_t>(host->second)]
                             [static_cast<std::size_t>(
                                 dir_index(arm.tip.other_arm))];
          if (arm.tip.slot_index < 0 ||
              arm.tip.slot_index >= static_cast<int>(hosted.size())) {
            throw std::runtime_error("extension of " + p.id + "." +
                                     dir_name(dir) +
                                     " points at a missing host slot");
          }
          rep.add_edge(prev,
                       hosted[static_cast<std::size_t>(arm.tip.slot_index)],
                       dir);
          break;
        }
        case Tip::Kind::kMeet: {
          auto key = meet_key(p.id, dir, arm.tip.other, arm.tip.other_arm);
          auto it = meet_vertex.find(key);
          int v;
          if (it == meet_vertex.end()) {
            v = new_vertex("m." + key.first.first + "." +
                           std::string(1,
                                       dir_char(dir_from_index(
                                           key.first.second))) +
                           "." + key.second.first + "." +
                           std::string(1, dir_char(dir_from_index(
                                              key.second.second))));
            meet_vertex.emplace(key, v);
          } else {
            v = it->second;
          }
          rep.add_edge(prev, v, dir);
          break;
        }
        case Tip::Kind::kMerge: {
          if (arm.tip.merge < 0 ||
              arm.tip.merge >= static_cast<int>(s.merges.size()) ||
              merge_vertex[static_cast<std::size_t>(arm.tip.merge)] < 0) {
            throw std::runtime_error("merged tip of " + p.id + "." +
                                     dir_name(dir) +
                                     " points at a missing meeting point");
          }
          rep.add_edge(
              prev, merge_vertex[static_cast<std::size_t>(arm.tip.merge)],
              dir);
          break;
        }
      }
    }
  }
  // Every slot vertex carries its host chain plus exactly one extender.
  for (std::size_t pi = 0; pi < s.pluses.size(); ++pi) {
    for (int d = 0; d < 4; ++d) {
      for (int v : arm_slot_vertex[pi][static_cast<std::size_t>(d)]) {
        if (rep.vertices[static_cast<std::size_t>(v)].degree() != 3) {
          throw std::runtime_error(
              "slot vertex " + rep.vertices[static_cast<std::size_t>(v)].id +
              " was not reached by its extender");
        }
      }
    }
  }
  // Every tip meet gathered both of its arms.
  for (const auto& [key, v] : meet_vertex) {
    if (rep.vertices[static_cast<std::size_t>(v)].degree() != 2) {
      throw std::runtime_error(
          "tip meet " + rep.vertices[static_cast<std::size_t>(v)].id +
          " is missing an arm");
    }
  }
  return rep;
}

std::vector<int> vertex_angles(const ShapeVertex& v) {
  std::vector<Dir> present;
  for (int d = 0; d < 4; ++d) {
    if (v.out[static_cast<std::size_t>(d)] >= 0) {
      present.push_back(dir_from_index(d));
    }
  }
  std::vector<int> angles;
  const int k = static_cast<int>(present.size());
  for (int i = 0; i < k; ++i) {
    Dir from = present[static_cast<std::size_t>(i)];
    Dir to = present[static_cast<std::size_t>((i + 1) % k)];
    angles.push_back(clockwise_sweep_degrees(from, to));
  }
  return angles;
}

std::string shape_dump(const ShapeRep& rep) {
  std::ostringstream out;
  for (const ShapeVertex& v : rep.vertices) {
    out << "v " << v.id << " angles=";
    std::vector<int> angles = vertex_angles(v);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      if (i > 0) out << ",";
      out << angles[i];
    }
    out << "\n";
  }
  for (const ShapeEdge& e : rep.edges) {
    out << "e " << rep.vertices[static_cast<std::size_t>(e.u)].id << " "
        << rep.vertices[static_cast<std::size_t>(e.v)].id << " bends=0\n";
  }
  return out.str();
}

}  // namespace plusdraw
