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

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace plusdraw {

namespace {

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 30;

std::string rect_str(const Rect& r) {
  std::ostringstream os;
  os << "'" << r.id << "' [" << r.x0 << "," << r.y0 << "," << r.x1 << ","
     << r.y1 << "]";
  return os.str();
}

}  // namespace

bool contained_x(const Rect& a, const Rect& b) {
  return b.x0 <= a.x0 && a.x1 <= b.x1;
}

bool properly_contained_x(const Rect& a, const Rect& b) {
  return contained_x(a, b) && !(a.x0 == b.x0 && a.x1 == b.x1);
}

bool contained_y(const Rect& a, const Rect& b) {
  return b.y0 <= a.y0 && a.y1 <= b.y1;
}

bool properly_contained_y(const Rect& a, const Rect& b) {
  return contained_y(a, b) && !(a.y0 == b.y0 && a.y1 == b.y1);
}

int Tiling::find(const std::string& id) const {
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (rects[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

const Rect& Tiling::at(const std::string& id) const {
  const int i = find(id);
  if (i < 0) throw std::out_of_range("no rect with id '" + id + "'");
  return rects[static_cast<std::size_t>(i)];
}

Rect& Tiling::at(const std::string& id) {
  const int i = find(id);
  if (i < 0) throw std::out_of_range("no rect with id '" + id + "'");
  return rects[static_cast<std::size_t>(i)];
}

std::vector<std::string> tiling_problems(const Tiling& t) {
  std::vector<std::string> out;
  if (!(t.bx0 < t.bx1 && t.by0 < t.by1)) {
    out.push_back("bounds are not a positive-area rectangle");
    return out;
  }
  for (const std::int64_t c : {t.bx0, t.by0, t.bx1, t.by1}) {
    if (c < -kCoordLimit || c > kCoordLimit) {
      out.push_back("bounds coordinate exceeds +/-2^30");
      return out;
    }
  }
  std::set<std::string> ids;
  for (const Rect& r : t.rects) {
    if (r.id.empty()) out.push_back("rect with empty id");
    if (!ids.insert(r.id).second) out.push_back("duplicate id '" + r.id + "'");
    if (!(r.x0 < r.x1 && r.y0 < r.y1)) {
      out.push_back("rect " + rect_str(r) + " has non-positive area");
    }
    for (const std::int64_t c : {r.x0, r.y0, r.x1, r.y1}) {
      if (c < -kCoordLimit || c > kCoordLimit) {
        out.push_back("rect " + rect_str(r) + " coordinate exceeds +/-2^30");
        break;
      }
    }
  }
  if (!out.empty()) return out;
  std::int64_t area_sum = 0;
  for (const Rect& r : t.rects) {
    if (r.x0 < t.bx0 || r.x1 > t.bx1 || r.y0 < t.by0 || r.y1 > t.by1) {
      out.push_back("rect " + rect_str(r) + " extends outside the bounds");
    }
    area_sum += r.width() * r.height();
  }
  for (std::size_t i = 0; i < t.rects.size(); ++i) {
    for (std::size_t j = i + 1; j < t.rects.size(); ++j) {
      const Rect& a = t.rects[i];
      const Rect& b = t.rects[j];
      const std::int64_t xl = std::max(a.x0, b.x0);
      const std::int64_t xh = std::min(a.x1, b.x1);
      const std::int64_t yl = std::max(a.y0, b.y0);
      const std::int64_t yh = std::min(a.y1, b.y1);
      if (xl < xh && yl < yh) {
        out.push_back("rects " + rect_str(a) + " and " + rect_str(b) +
                      " have overlapping interiors");
      }
    }
  }
  if (out.empty() &&
      area_sum != (t.bx1 - t.bx0) * (t.by1 - t.by0)) {
    out.push_back("rects do not cover the bounds (area mismatch)");
  }
  return out;
}

void validate_tiling(const Tiling& t) {
  const std::vector<std::string> problems = tiling_problems(t);
  if (problems.empty()) return;
  std::ostringstream os;
  os << "invalid tiling:";
  for (const std::string& p : problems) os << "\n  - " << p;
  throw std::runtime_error(os.str());
}

Adjacency classify_adjacency(const Rect& a, const Rect& b) {
  Adjacency adj;
  const std::int64_t xl = std::max(a.x0, b.x0);
  const std::int64_t xh = std::min(a.x1, b.x1);
  const std::int64_t yl = std::max(a.y0, b.y0);
  const std::int64_t yh = std::min(a.y1, b.y1);
  if (xl > xh || yl > yh) return adj;
  if (xl < xh && yl < yh) {
    throw std::invalid_argument("rects " + rect_str(a) + " and " +
                                rect_str(b) + " have overlapping interiors");
  }
  if (xl == xh && yl == yh) {
    adj.kind = AdjacencyKind::kCorner;
    adj.corner = Point{xl, yl};
    return adj;
  }
  if (xl == xh) {
    adj.kind = AdjacencyKind::kVertical;
    adj.line = xl;
    adj.lo = yl;
    adj.hi = yh;
    adj.comparable = contained_y(a, b) || contained_y(b, a);
  } else {
    adj.kind = AdjacencyKind::kHorizontal;
    adj.line = yl;
    adj.lo = xl;
    adj.hi = xh;
    adj.comparable = contained_x(a, b) || contained_x(b, a);
  }
  return adj;
}

std::vector<std::pair<std::string, std::string>> incomparable_pairs(
    const Tiling& t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < t.rects.size(); ++i) {
    for (std::size_t j = i + 1; j < t.rects.size(); ++j) {
      const Adjacency adj = classify_adjacency(t.rects[i], t.rects[j]);
      if ((adj.kind == AdjacencyKind::kVertical ||
           adj.kind == AdjacencyKind::kHorizontal) &&
          !adj.comparable) {
        const std::string& u = t.rects[i].id;
        const std::string& v = t.rects[j].id;
        out.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FourCorner> four_corner_points(const Tiling& t) {
  // which: 0 = z is the rect's top-right corner (rect sits bottom-left of z),
  // 1 = bottom-right (top-left rect), 2 = bottom-left (top-right rect),
  // 3 = top-left (bottom-right rect).
  std::map<Point, std::array<int, 4>> corners;
  auto note = [&corners](Point z, int which, int rect_index) {
    auto [it, inserted] = corners.try_emplace(z, std::array<int, 4>{-1, -1, -1, -1});
    it->second[static_cast<std::size_t>(which)] = rect_index;
  };
  for (std::size_t i = 0; i < t.rects.size(); ++i) {
    const Rect& r = t.rects[i];
    const int idx = static_cast<int>(i);
    note(Point{r.x1, r.y1}, 0, idx);
    note(Point{r.x1, r.y0}, 1, idx);
    note(Point{r.x0, r.y0}, 2, idx);
    note(Point{r.x0, r.y1}, 3, idx);
  }
  std::vector<FourCorner> out;
  for (const auto& [z, around] : corners) {
    if (around[0] < 0 || around[1] < 0 || around[2] < 0 || around[3] < 0) {
      continue;
    }
    FourCorner fc;
    fc.z = z;
    fc.bl = t.rects[static_cast<std::size_t>(around[0])].id;
    fc.tl = t.rects[static_cast<std::size_t>(around[1])].id;
    fc.tr = t.rects[static_cast<std::size_t>(around[2])].id;
    fc.br = t.rects[static_cast<std::size_t>(around[3])].id;
    out.push_back(fc);
  }
  std::sort(out.begin(), out.end(), [](const FourCorner& a, const FourCorner& b) {
    return std::tie(a.z.y, a.z.x) < std::tie(b.z.y, b.z.x);
  });
  return out;
}

nlohmann::ordered_json tiling_to_json(const Tiling& t) {
  nlohmann::ordered_json j;
  j["bounds"] = {t.bx0, t.by0, t.bx1, t.by1};
  j["rects"] = nlohmann::ordered_json::array();
  for (const Rect& r : t.rects) {
    nlohmann::ordered_json jr;
    jr["id"] = r.id;
    jr["box"] = {r.x0, r.y0, r.x1, r.y1};
    j["rects"].push_back(jr);
  }
  return j;
}

namespace {

std::array<std::int64_t, 4> parse_box(const nlohmann::ordered_json& j,
                                      const std::string& what) {
  if (!j.is_array() || j.size() != 4) {
    throw std::runtime_error(what + " must be an array of four integers");
  }
  std::array<std::int64_t, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer()) {
      throw std::runtime_error(what + " must be an array of four integers");
    }
    out[i] = j[i].get<std::int64_t>();
  }
  return out;
}

}  // namespace

Tiling tiling_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("bounds") || !j.contains("rects")) {
    throw std::runtime_error(
        "tiling JSON must be an object with 'bounds' and 'rects'");
  }
  Tiling t;
  const auto b = parse_box(j["bounds"], "'bounds'");
  t.bx0 = b[0];
  t.by0 = b[1];
  t.bx1 = b[2];
  t.by1 = b[3];
  if (!j["rects"].is_array()) {
    throw std::runtime_error("'rects' must be an array");
  }
  for (const auto& jr : j["rects"]) {
    if (!jr.is_object() || !jr.contains("id") || !jr.contains("box") ||
        !jr["id"].is_string()) {
      throw std::runtime_error(
          "each rect must be an object with string 'id' and 'box'");
    }
    Rect r;
    r.id = jr["id"].get<std::string>();
    const auto box = parse_box(jr["box"], "rect '" + r.id + "' box");
    r.x0 = box[0];
    r.y0 = box[1];
    r.x1 = box[2];
    r.y1 = box[3];
    t.rects.push_back(r);
  }
  return t;
}

Tiling tiling_from_json_text(const std::string& text) {
  return tiling_from_json(
      nlohmann::ordered_json::parse(text, nullptr, /*allow_exceptions=*/true));
}

}  // namespace plusdraw
