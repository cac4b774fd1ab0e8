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

#include "plusdraw/skeleton.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plusdraw {

Dir quadrant_arm(Quadrant q) {
  switch (q) {
    case Quadrant::TL: return Dir::W;
    case Quadrant::TR: return Dir::N;
    case Quadrant::BL: return Dir::S;
    case Quadrant::BR: return Dir::E;
  }
  throw std::logic_error("bad quadrant");
}

Quadrant arm_quadrant(Dir d) {
  switch (d) {
    case Dir::W: return Quadrant::TL;
    case Dir::N: return Quadrant::TR;
    case Dir::S: return Quadrant::BL;
    case Dir::E: return Quadrant::BR;
  }
  throw std::logic_error("bad dir");
}

std::string quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::TL: return "TL";
    case Quadrant::TR: return "TR";
    case Quadrant::BL: return "BL";
    case Quadrant::BR: return "BR";
  }
  throw std::logic_error("bad quadrant");
}

Point quadrant_corner(const Rect& r, Quadrant q) {
  switch (q) {
    case Quadrant::TL: return {r.x0, r.y1};
    case Quadrant::TR: return {r.x1, r.y1};
    case Quadrant::BL: return {r.x0, r.y0};
    case Quadrant::BR: return {r.x1, r.y0};
  }
  throw std::logic_error("bad quadrant");
}

Point arm_corner(const Rect& r, Dir arm) {
  return quadrant_corner(r, arm_quadrant(arm));
}

int Merge::attached_count() const {
  int n = 0;
  for (bool b : attached) n += b ? 1 : 0;
  return n;
}

int Merge::index_of(const std::string& id) const {
  for (int i = 0; i < 4; ++i) {
    if (rect[static_cast<std::size_t>(i)] == id) return i;
  }
  return -1;
}

int Skeleton::find(const std::string& id) const {
  for (std::size_t i = 0; i < pluses.size(); ++i) {
    if (pluses[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

PlusSkeleton& Skeleton::at(const std::string& id) {
  int i = find(id);
  if (i < 0) throw std::out_of_range("no plus skeleton for rect " + id);
  return pluses[static_cast<std::size_t>(i)];
}

const PlusSkeleton& Skeleton::at(const std::string& id) const {
  int i = find(id);
  if (i < 0) throw std::out_of_range("no plus skeleton for rect " + id);
  return pluses[static_cast<std::size_t>(i)];
}

namespace {

// Attachment forms for a member of a host side.  In clockwise order around
// the host, the first floor(t/2) members of a side use kFirst, the rest
// kSecond.
enum class Form { kFirst, kSecond };

Dir host_arm_for(Dir side, Form f) {
  return f == Form::kFirst ? counter_clockwise(side) : side;
}
Dir member_arm_for(Dir side, Form f) {
  return f == Form::kFirst ? opposite(side) : clockwise(side);
}
// Compass direction the member's edge occupies at the shared contact vertex.
Dir flank_for(Dir side, Form f) {
  return f == Form::kFirst ? side : counter_clockwise(side);
}

// One side adjacency with its current attachment state.
struct Designation {
  std::string host;
  Dir side = Dir::N;
  std::string member;
  int pos = 0;       // index in the side's clockwise member list
  int count = 0;     // t = size of that list
  Form form = Form::kSecond;
  bool absorbed = false;  // realized at a four-corner merge
  int merge = -1;         // merge index when absorbed
};

struct Assigner {
  const Tiling& t;
  Skeleton& sk;
  std::vector<Designation> desigs;
  // merge consumption: (rect, arm index) -> merge index
  std::map<std::pair<std::string, int>, int> merge_demand;
  std::map<Point, int> merge_at;
  // indices of desigs by member rect / by (host, side index)
  std::map<std::string, std::vector<int>> by_member;
  std::map<std::pair<std::string, int>, std::vector<int>> by_side;

  Assigner(const Tiling& tiling, Skeleton& skel) : t(tiling), sk(skel) {}

  static std::pair<std::string, int> key(const std::string& r, Dir d) {
    return {r, dir_index(d)};
  }

  // Merge absorbing designation d in form f: both designated cord corners
  // coincide at a four-corner point.
  std::optional<int> absorbing_merge(const Designation& d, Form f) const {
    const Rect& hr = t.at(d.host);
    const Rect& mr = t.at(d.member);
    Point hc = arm_corner(hr, host_arm_for(d.side, f));
    Point mc = arm_corner(mr, member_arm_for(d.side, f));
    if (!(hc == mc)) return std::nullopt;
    auto it = merge_at.find(hc);
    if (it == merge_at.end()) return std::nullopt;
    return it->second;
  }

  void build_merges() {
    for (const FourCorner& fc : four_corner_points(t)) {
      Merge m;
      m.z = fc.z;
      m.rect = {fc.bl, fc.tl, fc.tr, fc.br};
      m.arm = {Dir::N, Dir::E, Dir::S, Dir::W};
      int idx = static_cast<int>(sk.merges.size());
      merge_at[m.z] = idx;
      for (int i = 0; i < 4; ++i) {
        auto k = key(m.rect[static_cast<std::size_t>(i)],
                     m.arm[static_cast<std::size_t>(i)]);
        if (merge_demand.count(k)) {
          throw std::runtime_error("cord of rect " +
                                   m.rect[static_cast<std::size_t>(i)] +
                                   " demanded by two four-corner points");
        }
        merge_demand[k] = idx;
      }
      sk.merges.push_back(m);
    }
  }

  void build_designations() {
    for (const SideList& sl : side_lists(t)) {
      int tcount = static_cast<int>(sl.members.size());
      for (int i = 0; i < tcount; ++i) {
        Designation d;
        d.host = sl.host;
        d.side = sl.side;
        d.member = sl.members[static_cast<std::size_t>(i)];
        d.pos = i;
        d.count = tcount;
        d.form = (i < tcount / 2) ? Form::kFirst : Form::kSecond;
        if (auto m = absorbing_merge(d, d.form)) {
          d.absorbed = true;
          d.merge = *m;
        }
        int idx = static_cast<int>(desigs.size());
        desigs.push_back(d);
        by_member[d.member].push_back(idx);
        by_side[key(d.host, d.side)].push_back(idx);
      }
    }
  }

  // Arm demanded by designation d in form f, or nullopt when that form is
  // absorbed by a merge (no cord demand of its own).
  std::optional<Dir> demand_of(const Designation& d, Form f) const {
    if (absorbing_merge(d, f)) return std::nullopt;
    return member_arm_for(d.side, f);
  }

  // Re-derive absorbed/merge fields of d from its current form.
  void refresh(Designation& d) const {
    if (auto m = absorbing_merge(d, d.form)) {
      d.absorbed = true;
      d.merge = *m;
    } else {
      d.absorbed = false;
      d.merge = -1;
    }
  }

  // True when flipping designation `di` to form f keeps the member's demands
  // pairwise distinct and clear of merge-consumed arms.
  bool feasible_with(int di, Form f) const {
    const Designation& d = desigs[static_cast<std::size_t>(di)];
    std::set<int> used;
    for (int i = 0; i < 4; ++i) {
      if (merge_demand.count(key(d.member, dir_from_index(i)))) used.insert(i);
    }
    const auto& idxs = by_member.at(d.member);
    for (int oi : idxs) {
      const Designation& o = desigs[static_cast<std::size_t>(oi)];
      Form of = (oi == di) ? f : o.form;
      auto arm = demand_of(o, of);
      if (!arm) continue;
      if (!used.insert(dir_index(*arm)).second) return false;
    }
    return true;
  }

  // Choose forms per member so that all cord demands are distinct.  At most
  // four designations per member, so all form combinations are scanned; the
  // one with the fewest flips from the half-split default wins.  Ties prefer
  // flipping designations on sides with fewer members, so that crowded sides
  // keep their half split (a deviation there costs balance, a deviation on a
  // one-member side is absorbed by the slack), then the lowest flip mask over
  // designations in side order N,E,S,W.
  void resolve_conflicts() {
    for (auto& [member, idxs] : by_member) {
      std::vector<int> order = idxs;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return dir_index(desigs[static_cast<std::size_t>(a)].side) <
               dir_index(desigs[static_cast<std::size_t>(b)].side);
      });
      std::set<int> fixed;
      for (int i = 0; i < 4; ++i) {
        if (merge_demand.count(key(member, dir_from_index(i)))) fixed.insert(i);
      }
      int k = static_cast<int>(order.size());
      int best_mask = -1, best_flips = 0, best_weight = 0;
      for (int mask = 0; mask < (1 << k); ++mask) {
        std::set<int> used = fixed;
        bool ok = true;
        int flips = 0, weight = 0;
        for (int j = 0; j < k && ok; ++j) {
          const Designation& d = desigs[static_cast<std::size_t>(order[j])];
          bool flip = (mask >> j) & 1;
          Form f = !flip ? d.form
                         : (d.form == Form::kFirst ? Form::kSecond
                                                   : Form::kFirst);
          if (flip) {
            ++flips;
            weight += d.count;
          }
          auto arm = demand_of(d, f);
          if (!arm) continue;
          if (!used.insert(dir_index(*arm)).second) ok = false;
        }
        if (ok && (best_mask < 0 || flips < best_flips ||
                   (flips == best_flips && weight < best_weight))) {
          best_mask = mask;
          best_flips = flips;
          best_weight = weight;
        }
      }
      if (best_mask < 0) {
        throw std::runtime_error("cord demands of rect " + member +
                                 " cannot be made disjoint");
      }
      for (int j = 0; j < k; ++j) {
        if ((best_mask >> j) & 1) {
          Designation& d = desigs[static_cast<std::size_t>(order[j])];
          d.form = d.form == Form::kFirst ? Form::kSecond : Form::kFirst;
          refresh(d);
        }
      }
    }
  }

  // Restore each side's two groups towards the floor(t/2) / ceil(t/2) split
  // after conflict flips, moving only members whose flip stays feasible.
  void rebalance_sides() {
    for (auto& [skey, idxs] : by_side) {
      int tcount = static_cast<int>(idxs.size());
      int target_first = tcount / 2;
      auto count_first = [&]() {
        int n = 0;
        for (int i : idxs) {
          if (desigs[static_cast<std::size_t>(i)].form == Form::kFirst) ++n;
        }
        return n;
      };
      int guard = tcount + 1;
      while (guard-- > 0) {
        int f = count_first();
        if (f == target_first) break;
        bool flipped = false;
        if (f > target_first) {
          // Flip the clockwise-last first-form member that can move.
          for (auto it = idxs.rbegin(); it != idxs.rend(); ++it) {
            Designation& d = desigs[static_cast<std::size_t>(*it)];
            if (d.form == Form::kFirst && feasible_with(*it, Form::kSecond)) {
              d.form = Form::kSecond;
              refresh(d);
              flipped = true;
              break;
            }
          }
        } else {
          // Flip the clockwise-first second-form member that can move.
          for (int i : idxs) {
            Designation& d = desigs[static_cast<std::size_t>(i)];
            if (d.form == Form::kSecond && feasible_with(i, Form::kFirst)) {
              d.form = Form::kFirst;
              refresh(d);
              flipped = true;
              break;
            }
          }
        }
        if (!flipped) break;
      }
      int dev = count_first() - target_first;
      if (dev < -1 || dev > 1) {
        std::ostringstream os;
        os << "side group of rect "
           << desigs[static_cast<std::size_t>(idxs[0])].host
           << " deviates from its half-split by " << dev;
        throw std::runtime_error(os.str());
      }
    }
  }

  void materialize() {
    // Merge tips and the two diagonal adjacencies per merge point.
    for (std::size_t mi = 0; mi < sk.merges.size(); ++mi) {
      const Merge& m = sk.merges[mi];
      for (int i = 0; i < 4; ++i) {
        Arm& a = sk.at(m.rect[static_cast<std::size_t>(i)])
                     .arm(m.arm[static_cast<std::size_t>(i)]);
        a.tip.kind = Tip::Kind::kMerge;
        a.tip.merge = static_cast<int>(mi);
      }
      Contact c1;  // bl - tr
      c1.kind = ContactKind::kCornerMerge;
      c1.host = m.rect[2];
      c1.host_arm = Dir::S;
      c1.extender = m.rect[0];
      c1.extender_arm = Dir::N;
      c1.at = m.z;
      sk.contacts.push_back(c1);
      Contact c2;  // tl - br
      c2.kind = ContactKind::kCornerMerge;
      c2.host = m.rect[1];
      c2.host_arm = Dir::E;
      c2.extender = m.rect[3];
      c2.extender_arm = Dir::W;
      c2.at = m.z;
      sk.contacts.push_back(c2);
    }
    // Slots per host arm: own side's second-form members in forward clockwise
    // order (nearest the center first), then the clockwise-next side's
    // first-form members in reverse clockwise order, nearest the cord end.
    for (PlusSkeleton& ps : sk.pluses) {
      for (int ai = 0; ai < 4; ++ai) {
        Dir arm = dir_from_index(ai);
        Arm& a = ps.arm(arm);
        auto add_slot = [&](const Designation& d) {
          Slot s;
          s.extender = d.member;
          s.flank = flank_for(d.side, d.form);
          a.slots.push_back(s);
          Contact c;
          c.kind = ContactKind::kSlot;
          c.host = d.host;
          c.host_arm = arm;
          c.extender = d.member;
          c.extender_arm = member_arm_for(d.side, d.form);
          sk.contacts.push_back(c);
          Tip& tip = sk.at(d.member).arm(c.extender_arm).tip;
          tip.kind = Tip::Kind::kExtend;
          tip.other = d.host;
          tip.other_arm = arm;
          tip.slot_index = static_cast<int>(a.slots.size()) - 1;
        };
        auto own = by_side.find(key(ps.id, arm));
        if (own != by_side.end()) {
          for (int i : own->second) {
            const Designation& d = desigs[static_cast<std::size_t>(i)];
            if (d.form == Form::kSecond && !d.absorbed) add_slot(d);
          }
        }
        auto next = by_side.find(key(ps.id, clockwise(arm)));
        if (next != by_side.end()) {
          for (auto it = next->second.rbegin(); it != next->second.rend();
               ++it) {
            const Designation& d = desigs[static_cast<std::size_t>(*it)];
            if (d.form == Form::kFirst && !d.absorbed) add_slot(d);
          }
        }
      }
    }
    // Absorbed side adjacencies, realized at their merge point.
    for (const Designation& d : desigs) {
      if (!d.absorbed) continue;
      Contact c;
      c.kind = ContactKind::kCornerMerge;
      c.host = d.host;
      c.host_arm = host_arm_for(d.side, d.form);
      c.extender = d.member;
      c.extender_arm = member_arm_for(d.side, d.form);
      c.at = sk.merges[static_cast<std::size_t>(d.merge)].z;
      sk.contacts.push_back(c);
    }
  }

  void run() {
    build_merges();
    build_designations();
    resolve_conflicts();
    rebalance_sides();
    materialize();
  }
};

}  // namespace

std::vector<SideList> side_lists(const Tiling& t) {
  std::map<std::pair<std::string, int>, std::vector<std::string>> lists;
  for (std::size_t i = 0; i < t.rects.size(); ++i) {
    for (std::size_t j = i + 1; j < t.rects.size(); ++j) {
      const Rect& a = t.rects[i];
      const Rect& b = t.rects[j];
      Adjacency adj = classify_adjacency(a, b);
      if (adj.kind == AdjacencyKind::kNone ||
          adj.kind == AdjacencyKind::kCorner)
        continue;
      if (!adj.comparable) {
        throw std::runtime_error("incomparable side adjacency between " +
                                 a.id + " and " + b.id +
                                 " (tiling is not consistent)");
      }
      const Rect* host = nullptr;
      Dir side = Dir::N;
      const Rect* member = nullptr;
      if (adj.kind == AdjacencyKind::kHorizontal) {
        const Rect& below = a.y1 == adj.line ? a : b;
        const Rect& above = a.y1 == adj.line ? b : a;
        if (contained_x(above, below)) {
          host = &below;
          member = &above;
          side = Dir::N;
        } else {
          host = &above;
          member = &below;
          side = Dir::S;
        }
      } else {
        const Rect& left = a.x1 == adj.line ? a : b;
        const Rect& right = a.x1 == adj.line ? b : a;
        if (contained_y(right, left)) {
          host = &left;
          member = &right;
          side = Dir::E;
        } else {
          host = &right;
          member = &left;
          side = Dir::W;
        }
      }
      lists[{host->id, dir_index(side)}].push_back(member->id);
    }
  }
  std::vector<SideList> out;
  for (auto& [k, members] : lists) {
    SideList sl;
    sl.host = k.first;
    sl.side = dir_from_index(k.second);
    // Clockwise order around the host: top left-to-right, right
    // top-to-bottom, bottom right-to-left, left bottom-to-top.
    std::sort(members.begin(), members.end(),
              [&](const std::string& x, const std::string& y) {
                const Rect& rx = t.at(x);
                const Rect& ry = t.at(y);
                switch (sl.side) {
                  case Dir::N: return rx.x0 < ry.x0;
                  case Dir::E: return rx.y0 > ry.y0;
                  case Dir::S: return rx.x0 > ry.x0;
                  case Dir::W: return rx.y0 < ry.y0;
                }
                return false;
              });
    sl.members = std::move(members);
    out.push_back(std::move(sl));
  }
  return out;
}

Skeleton build_cords(const Tiling& t) {
  auto problems = tiling_problems(t);
  if (!problems.empty()) {
    throw std::invalid_argument("invalid tiling: " + problems.front());
  }
  Skeleton sk;
  for (const Rect& r : t.rects) {
    PlusSkeleton ps;
    ps.id = r.id;
    sk.pluses.push_back(std::move(ps));
  }
  return sk;
}

void assign_contacts(const Tiling& t, Skeleton& sk) {
  Assigner a(t, sk);
  a.run();
}

Skeleton build_skeleton(const Tiling& t) {
  Skeleton sk = build_cords(t);
  assign_contacts(t, sk);
  return sk;
}

std::array<int, 4> cord_counts(const Skeleton& sk, const std::string& rect) {
  const PlusSkeleton& ps = sk.at(rect);
  std::array<int, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const Arm& a = ps.arms[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] =
        static_cast<int>(a.slots.size()) +
        (a.tip.kind == Tip::Kind::kFree ? 0 : 1);
  }
  return out;
}

std::vector<std::string> balance_problems(const Skeleton& sk,
                                          const Tiling& t) {
  (void)t;
  std::map<std::string, int> deg;
  for (const Contact& c : sk.contacts) {
    ++deg[c.host];
    ++deg[c.extender];
  }
  std::vector<std::string> out;
  for (const PlusSkeleton& ps : sk.pluses) {
    std::array<int, 4> counts = cord_counts(sk, ps.id);
    int d = deg.count(ps.id) ? deg[ps.id] : 0;
    int bound = (d + 1) / 2 + kBalanceSlack;
    for (int i = 0; i < 4; ++i) {
      if (counts[static_cast<std::size_t>(i)] > bound) {
        std::ostringstream os;
        os << "cord " << dir_name(dir_from_index(i)) << " of rect " << ps.id
           << " carries " << counts[static_cast<std::size_t>(i)]
           << " contact points, above ceil(" << d << "/2)+" << kBalanceSlack;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

std::vector<std::string> skeleton_problems(const Skeleton& sk) {
  std::vector<std::string> out;
  auto complain = [&out](const std::string& msg) { out.push_back(msg); };
  for (const PlusSkeleton& ps : sk.pluses) {
    for (int ai = 0; ai < 4; ++ai) {
      Dir arm = dir_from_index(ai);
      const Arm& a = ps.arm(arm);
      for (std::size_t si = 0; si < a.slots.size(); ++si) {
        const Slot& s = a.slots[si];
        if (is_horizontal(arm) == is_horizontal(s.flank)) {
          complain("slot flank not perpendicular to arm on " + ps.id + "." +
                   std::string(1, dir_char(arm)));
          continue;
        }
        int mi = sk.find(s.extender);
        if (mi < 0) {
          complain("slot extender " + s.extender + " unknown");
          continue;
        }
        const Arm& ma =
            sk.pluses[static_cast<std::size_t>(mi)].arm(opposite(s.flank));
        if (ma.tip.kind != Tip::Kind::kExtend || ma.tip.other != ps.id ||
            ma.tip.other_arm != arm ||
            ma.tip.slot_index != static_cast<int>(si)) {
          complain("slot " + std::to_string(si) + " on " + ps.id + "." +
                   std::string(1, dir_char(arm)) +
                   " has no matching tip on " + s.extender);
        }
      }
      const Tip& tip = a.tip;
      switch (tip.kind) {
        case Tip::Kind::kFree:
          break;
        case Tip::Kind::kExtend: {
          int hi = sk.find(tip.other);
          if (hi < 0) {
            complain("tip host " + tip.other + " unknown");
            break;
          }
          const Arm& ha =
              sk.pluses[static_cast<std::size_t>(hi)].arm(tip.other_arm);
          if (tip.slot_index < 0 ||
              tip.slot_index >= static_cast<int>(ha.slots.size()) ||
              ha.slots[static_cast<std::size_t>(tip.slot_index)].extender !=
                  ps.id) {
            complain("extending tip of " + ps.id + "." +
                     std::string(1, dir_char(arm)) +
                     " does not match a host slot");
          }
          if (is_horizontal(arm) == is_horizontal(tip.other_arm)) {
            complain("extension of " + ps.id + "." +
                     std::string(1, dir_char(arm)) +
                     " is parallel to the host cord");
          }
          break;
        }
        case Tip::Kind::kMeet: {
          int oi = sk.find(tip.other);
          if (oi < 0) {
            complain("meet partner " + tip.other + " unknown");
            break;
          }
          if (tip.other_arm != opposite(arm)) {
            complain("tip meet of " + ps.id + "." +
                     std::string(1, dir_char(arm)) + " is not collinear");
          }
          const Tip& ot =
              sk.pluses[static_cast<std::size_t>(oi)].arm(tip.other_arm).tip;
          if (ot.kind != Tip::Kind::kMeet || ot.other != ps.id ||
              ot.other_arm != arm) {
            complain("tip meet of " + ps.id + "." +
                     std::string(1, dir_char(arm)) + " is not reciprocated");
          }
          break;
        }
        case Tip::Kind::kMerge: {
          if (tip.merge < 0 ||
              tip.merge >= static_cast<int>(sk.merges.size())) {
            complain("merge index out of range on " + ps.id);
            break;
          }
          const Merge& m = sk.merges[static_cast<std::size_t>(tip.merge)];
          int pos = m.index_of(ps.id);
          if (pos < 0 || m.arm[static_cast<std::size_t>(pos)] != arm ||
              !m.attached[static_cast<std::size_t>(pos)]) {
            complain("merged tip of " + ps.id + "." +
                     std::string(1, dir_char(arm)) +
                     " not attached in its merge record");
          }
          break;
        }
      }
      if (a.truncated && tip.kind != Tip::Kind::kFree) {
        complain("truncated cord " + ps.id + "." +
                 std::string(1, dir_char(arm)) +
                 " still has an attached tip");
      }
    }
  }
  for (std::size_t mi = 0; mi < sk.merges.size(); ++mi) {
    const Merge& m = sk.merges[mi];
    for (int i = 0; i < 4; ++i) {
      if (!m.attached[static_cast<std::size_t>(i)]) continue;
      int ri = sk.find(m.rect[static_cast<std::size_t>(i)]);
      if (ri < 0) {
        complain("merge rect " + m.rect[static_cast<std::size_t>(i)] +
                 " unknown");
        continue;
      }
      const Tip& tip = sk.pluses[static_cast<std::size_t>(ri)]
                           .arm(m.arm[static_cast<std::size_t>(i)])
                           .tip;
      if (tip.kind != Tip::Kind::kMerge ||
          tip.merge != static_cast<int>(mi)) {
        complain("merge " + std::to_string(mi) + " participant " +
                 m.rect[static_cast<std::size_t>(i)] +
                 " does not point back at it");
      }
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const Contact& c : sk.contacts) {
    auto pair = std::minmax(c.host, c.extender);
    if (!seen.insert({pair.first, pair.second}).second) {
      complain("duplicate contact between " + c.host + " and " + c.extender);
    }
    if (c.kind == ContactKind::kSlot) {
      const Arm& ha = sk.at(c.host).arm(c.host_arm);
      bool found = false;
      for (const Slot& s : ha.slots) found = found || s.extender == c.extender;
      if (!found) {
        complain("slot contact " + c.host + "-" + c.extender +
                 " has no slot record");
      }
    }
  }
  return out;
}

}  // namespace plusdraw
