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

#include "plusdraw/generator.hpp"

#include <stdexcept>
#include <string>

#include "plusdraw/rng.hpp"

namespace plusdraw {

namespace {

// Splits rect index i of t at an interior coordinate; vertical=true splits
// with a vertical line at x=c.  The low part keeps the id, the high part gets
// fresh_id.
void split_rect(Tiling& t, std::size_t i, bool vertical, std::int64_t c,
                const std::string& fresh_id) {
  Rect& r = t.rects[i];
  Rect high = r;
  high.id = fresh_id;
  if (vertical) {
    r.x1 = c;
    high.x0 = c;
  } else {
    r.y1 = c;
    high.y0 = c;
  }
  t.rects.push_back(high);
}

void scale_by_two(Tiling& t) {
  t.bx0 *= 2;
  t.by0 *= 2;
  t.bx1 *= 2;
  t.by1 *= 2;
  for (Rect& r : t.rects) {
    r.x0 *= 2;
    r.y0 *= 2;
    r.x1 *= 2;
    r.y1 *= 2;
  }
}

// Picks a splittable rect (area >= 2): a random index, advanced to the next
// splittable one.  Some rect is splittable whenever rect count < bounds area.
std::size_t pick_splittable(const Tiling& t, Rng& rng) {
  const std::size_t n = t.rects.size();
  std::size_t i = static_cast<std::size_t>(rng.next_below(n));
  for (std::size_t step = 0; step < n; ++step) {
    const Rect& r = t.rects[(i + step) % n];
    if (r.width() > 1 || r.height() > 1) return (i + step) % n;
  }
  throw std::logic_error("no splittable rect left");
}

// Random orientation + coordinate for splitting rect r; vertical splits need
// width >= 2, horizontal ones height >= 2.
std::pair<bool, std::int64_t> pick_split(const Rect& r, Rng& rng) {
  bool vertical;
  if (r.width() > 1 && r.height() > 1) {
    vertical = rng.next_bool();
  } else {
    vertical = r.width() > 1;
  }
  const std::int64_t lo = vertical ? r.x0 : r.y0;
  const std::int64_t hi = vertical ? r.x1 : r.y1;
  return {vertical, rng.next_in_range(lo + 1, hi - 1)};
}

// Grows t to n rects by random splits, rejecting any split that would make
// four rects meet at a point (such contacts have no well-defined side
// adjacency, so every generator avoids them).
void grow_slicing(Tiling& t, int n, Rng& rng) {
  while (t.rects.size() < static_cast<std::size_t>(n)) {
    bool placed = false;
    for (int attempt = 0; attempt < 40 && !placed; ++attempt) {
      const std::size_t i = pick_splittable(t, rng);
      const auto [vertical, c] = pick_split(t.rects[i], rng);
      Tiling candidate = t;
      split_rect(candidate, i, vertical, c,
                 "r" + std::to_string(t.rects.size()));
      if (four_corner_points(candidate).empty()) {
        t = std::move(candidate);
        placed = true;
      }
    }
    if (!placed) {
      // Give the split room: after doubling, every existing corner sits on
      // even coordinates, so odd split lines cannot produce four-corner
      // points.
      scale_by_two(t);
    }
  }
}

}  // namespace

Tiling gen_slicing(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_slicing needs n >= 1");
  Rng rng(seed);
  Tiling t;
  const std::int64_t side = n;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = side;
  t.by1 = side;
  t.rects.push_back(Rect{"r0", 0, 0, side, side});
  grow_slicing(t, n, rng);
  validate_tiling(t);
  return t;
}

Tiling gen_windmill(int k) {
  if (k < 1) throw std::invalid_argument("gen_windmill needs k >= 1");
  Tiling t;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = 5 * k - 1;
  t.by1 = 4;
  for (int j = 0; j < k; ++j) {
    const std::int64_t dx = 5 * j;
    const std::string u = std::to_string(j);
    auto add = [&](const char* name, std::int64_t x0, std::int64_t y0,
                   std::int64_t x1, std::int64_t y1) {
      t.rects.push_back(Rect{name + u, dx + x0, y0, dx + x1, y1});
    };
    add("a", 0, 0, 2, 1);
    add("b", 2, 0, 3, 1);
    add("c", 3, 0, 4, 2);
    add("d", 3, 2, 4, 3);
    add("e", 2, 3, 4, 4);
    add("f", 1, 3, 2, 4);
    add("g", 0, 2, 1, 4);
    add("h", 0, 1, 1, 2);
    add("m", 1, 1, 3, 3);
    if (j + 1 < k) {
      t.rects.push_back(Rect{"s" + u, dx + 4, 0, dx + 5, 4});
    }
  }
  validate_tiling(t);
  return t;
}

std::pair<Tiling, Graph> gen_dual_instance(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_dual_instance needs n >= 4");
  Rng rng(seed);
  Tiling t;
  const std::int64_t side = n;
  t.bx0 = 0;
  t.by0 = 0;
  t.bx1 = side;
  t.by1 = side;
  t.rects.push_back(Rect{"r0", 0, 0, side, side});
  grow_slicing(t, n, rng);
  validate_tiling(t);
  Graph g = contact_graph(t, /*include_corner=*/false);
  if (!is_rectangular_dual(t, g)) {
    throw std::logic_error("generated tiling is not a rectangular dual");
  }
  return {std::move(t), std::move(g)};
}

}  // namespace plusdraw
