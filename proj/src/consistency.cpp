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

#include <algorithm>
#include <stdexcept>

namespace plusdraw {

namespace {

void transpose(Tiling& t) {
  std::swap(t.bx0, t.by0);
  std::swap(t.bx1, t.by1);
  for (Rect& r : t.rects) {
    std::swap(r.x0, r.y0);
    std::swap(r.x1, r.y1);
  }
}

void mirror_y(Tiling& t) {
  const std::int64_t lo = t.by0, hi = t.by1;
  t.by0 = -hi;
  t.by1 = -lo;
  for (Rect& r : t.rects) {
    const std::int64_t a = r.y0, b = r.y1;
    r.y0 = -b;
    r.y1 = -a;
  }
}

// Canonical cut: p (left of the shared line) overhangs upward, q (right)
// overhangs downward.  The seam opens along the chain that runs under p's
// bottom edge on the left, up the shared segment, and over q's top edge on
// the right; everything above it rises by the segment length h, rects the
// chain passes through keep their bottom and grow by h.
void cut_vertical_up(Tiling& t, const Rect& p, const Rect& q) {
  const std::int64_t x0 = p.x1;
  const std::int64_t y_lo = p.y0;
  const std::int64_t y_hi = q.y1;
  const std::int64_t h = y_hi - y_lo;
  for (Rect& r : t.rects) {
    if (r.x1 <= x0) {
      if (r.y0 >= y_lo) {
        r.y0 += h;
        r.y1 += h;
      } else if (r.y1 >= y_lo) {
        r.y1 += h;
      }
    } else if (r.x0 >= x0) {
      if (r.y1 <= y_hi) {
        // keep
      } else if (r.y0 > y_hi) {
        r.y0 += h;
        r.y1 += h;
      } else {
        r.y1 += h;
      }
    } else {
      if (r.y0 >= y_hi) {
        r.y0 += h;
        r.y1 += h;
      } else if (r.y1 <= y_lo) {
        // keep
      } else {
        throw std::logic_error("rect spans the cut line inside the seam: '" +
                               r.id + "'");
      }
    }
  }
  t.by1 += h;
}

}  // namespace

std::pair<Tiling, CutEvent> apply_cut(const Tiling& t, const std::string& u,
                                      const std::string& v) {
  const Adjacency adj = classify_adjacency(t.at(u), t.at(v));
  if (adj.kind != AdjacencyKind::kVertical &&
      adj.kind != AdjacencyKind::kHorizontal) {
    throw std::invalid_argument("rects '" + u + "' and '" + v +
                                "' are not side adjacent");
  }
  if (adj.comparable) {
    throw std::invalid_argument("rects '" + u + "' and '" + v +
                                "' are comparable; nothing to cut");
  }

  Tiling work = t;
  const bool transposed = adj.kind == AdjacencyKind::kHorizontal;
  if (transposed) transpose(work);

  // Left rect of the now-vertical contact.
  {
    const Rect& a = work.at(u);
    const Rect& b = work.at(v);
    const std::int64_t line = std::max(a.x0, b.x0);
    const Rect& left = a.x1 == line ? a : b;
    const Rect& right = a.x1 == line ? b : a;
    // Canonical chirality: left overhangs upward.  Incomparable vertical
    // pairs satisfy either (left.y0 > right.y0 and left.y1 > right.y1) or the
    // mirrored inequalities.
    const bool mirrored = left.y0 < right.y0;
    if (mirrored) mirror_y(work);
    const Rect& pp = work.at(left.id);
    const Rect& qq = work.at(right.id);
    cut_vertical_up(work, pp, qq);
    if (mirrored) mirror_y(work);
  }
  if (transposed) transpose(work);

  CutEvent ev;
  ev.p = u;
  ev.q = v;
  ev.was_horizontal = transposed;
  bool found = false;
  for (const FourCorner& fc : four_corner_points(work)) {
    const bool on_rising = (fc.bl == u && fc.tr == v) || (fc.bl == v && fc.tr == u);
    const bool on_falling = (fc.tl == u && fc.br == v) || (fc.tl == v && fc.br == u);
    if (on_rising || on_falling) {
      if (found) {
        throw std::logic_error("cut produced more than one corner point for '" +
                               u + "','" + v + "'");
      }
      found = true;
      ev.z = fc.z;
      if (on_rising) {
        ev.excess_u = fc.tl;
        ev.excess_v = fc.br;
      } else {
        ev.excess_u = fc.bl;
        ev.excess_v = fc.tr;
      }
    }
  }
  if (!found) {
    throw std::logic_error("cut did not produce a corner point for '" + u +
                           "','" + v + "'");
  }
  return {std::move(work), ev};
}

ConsistencyResult make_consistent(const Tiling& input, bool with_trace) {
  validate_tiling(input);
  if (!four_corner_points(input).empty()) {
    throw std::invalid_argument(
        "input tiling already has four-corner points");
  }
  ConsistencyResult res;
  res.tiling = input;
  const std::size_t initial = incomparable_pairs(input).size();
  std::size_t rounds = 0;
  while (true) {
    const auto pairs = incomparable_pairs(res.tiling);
    if (pairs.empty()) break;
    if (++rounds > initial + 1) {
      throw std::logic_error("cut procedure failed to converge");
    }
    for (const auto& [a, b] : pairs) {
      // An earlier cut in this round may have fixed this pair for free.
      const Adjacency adj =
          classify_adjacency(res.tiling.at(a), res.tiling.at(b));
      if (adj.kind == AdjacencyKind::kCorner ||
          adj.kind == AdjacencyKind::kNone || adj.comparable) {
        continue;
      }
      auto [next, ev] = apply_cut(res.tiling, a, b);
      res.tiling = std::move(next);
      res.cuts.push_back(ev);
      if (with_trace) res.snapshots.push_back(res.tiling);
    }
  }
  validate_tiling(res.tiling);
  return res;
}

}  // namespace plusdraw
