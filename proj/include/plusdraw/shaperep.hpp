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

#ifndef PLUSDRAW_SHAPEREP_HPP_
#define PLUSDRAW_SHAPEREP_HPP_

#include <array>
#include <string>
#include <vector>

#include "plusdraw/geometry.hpp"
#include "plusdraw/skeleton.hpp"

namespace plusdraw {

// Orthogonal shape description: a plane graph where every edge carries an
// exact compass direction and every vertex has at most one edge per
// direction.  The rotation system is implied by the directions, so faces and
// their angle sums are fully determined before any coordinates exist.

struct ShapeVertex {
  std::string id;
  // Edge index per outgoing direction, -1 if absent (indexed by dir_index).
  std::array<int, 4> out = {-1, -1, -1, -1};
  int degree() const;
};

struct ShapeEdge {
  int u = 0;
  int v = 0;
  Dir dir = Dir::N;  // direction travelling u -> v
};

struct ShapeRep {
  std::vector<ShapeVertex> vertices;
  std::vector<ShapeEdge> edges;

  int find(const std::string& id) const;  // -1 if absent
  // Adds a vertex (id must be new) / an edge (slots must be free); returns
  // the new index.  Throws std::runtime_error on conflicts.
  int add_vertex(const std::string& id);
  int add_edge(int u, int v, Dir dir_uv);
};

// One face of the rotation system induced by edge directions.  Traversal
// keeps the face on the left of each directed edge; at a vertex entered via
// direction d the walk leaves along the first direction clockwise from
// opposite(d) (the entering edge itself counts, which turns around at
// degree-1 tips).  The angle between the entering and leaving edge is the
// clockwise sweep from opposite(d) to the leaving direction with 0 treated
// as 360, and its turn value is 2 - angle/90.  Interior faces have turn sum
// +4; the single outer face has -4.
struct ShapeFace {
  std::vector<int> edge_seq;  // directed edges: 2*e (u->v) or 2*e+1 (v->u)
  int turn_sum = 0;
};

std::vector<ShapeFace> trace_faces(const ShapeRep& rep);

// Validates that the directed structure is a consistent plane embedding of a
// connected graph: every vertex direction slot coherent, faces partition the
// directed edges, Euler's relation V - E + F = 2 holds, exactly one face has
// turn sum -4 and all others +4.  Returns an empty string when fine, else a
// description of the first problem.
std::string embedding_problem(const ShapeRep& rep);

// Builds the shape of a skeleton: one degree-4 center per plus and a chain of
// slot vertices along every arm in slot order, ending at the arm's tip.  An
// extended tip reuses the host slot's vertex (degree 3, face angles
// 90/90/180); a merged tip ends at the shared four-corner vertex ("z<k>"); a
// meeting tip shares a straight degree-2 vertex with the facing arm; a free
// tip ends at a degree-1 vertex ("<rect>.<d>t").  Slot vertices are named
// "<host>.<d><i>" by hosting arm and slot index.
ShapeRep shape_of_skeleton(const Skeleton& s);

// Face angles around a vertex: clockwise sweeps between consecutive present
// directions, starting from the first present direction in N,E,S,W order.
// A degree-1 vertex has the single angle 360.
std::vector<int> vertex_angles(const ShapeVertex& v);

// Debug dump: one line per vertex ("v <id> angles=<a1,a2,...>") and one per
// edge ("e <u> <v> bends=<k>"), in index order.  Every cord piece has
// bend-number 0.
std::string shape_dump(const ShapeRep& rep);

}  // namespace plusdraw

#endif  // PLUSDRAW_SHAPEREP_HPP_
