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

#ifndef PLUSDRAW_SKELETON_HPP_
#define PLUSDRAW_SKELETON_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "plusdraw/geometry.hpp"
#include "plusdraw/tiling.hpp"

namespace plusdraw {

// ---------------------------------------------------------------------------
// Cord-based plus skeleton.
//
// Every rectangle contributes a center and four cords, one per rectangle
// corner (quadrants TL/TR/BL/BR).  All combinatorics live in a frame rotated
// 45 degrees counter-clockwise, where each cord is an axis-parallel arm:
//
//      TL -> W     TR -> N     BL -> S     BR -> E
//
// so the TL-BR cord pair forms the horizontal through-path and BL-TR the
// vertical one, crossing at the center with four 90-degree angles.
//
// Contacts between adjacent rectangles come in three kinds:
//  * kSlot        - the member's cord tip touches the interior of one of the
//                   host's cords, approaching perpendicular from one flank;
//  * kTipMeet     - two collinear cord tips meet head-on (used when an excess
//                   rewrite separates a four-corner meeting);
//  * kCornerMerge - the cords of the four rectangles around a four-corner
//                   point end at a single shared vertex; every adjacency
//                   whose two designated cords end at that point (the two
//                   diagonal pairs, plus any side pair with aligned corners)
//                   is realized there.
// ---------------------------------------------------------------------------

enum class Quadrant : int { TL = 0, TR = 1, BL = 2, BR = 3 };

// Rotated-frame arm direction of a quadrant cord and back.
Dir quadrant_arm(Quadrant q);
Quadrant arm_quadrant(Dir d);
std::string quadrant_name(Quadrant q);
// The rectangle corner at which the quadrant's cord ends.
Point quadrant_corner(const Rect& r, Quadrant q);
Point arm_corner(const Rect& r, Dir arm);

// A contact point on the interior of a host cord.  The member's cord arrives
// perpendicular to the host arm; `flank` is the compass direction the
// member's edge occupies at the shared vertex (one of the two directions
// perpendicular to the host arm).  The member's arm direction is
// opposite(flank).
struct Slot {
  std::string extender;
  Dir flank = Dir::N;
  friend bool operator==(const Slot&, const Slot&) = default;
};

// Tip state of an arm.
//  kFree   - the cord ends unattached (degree-1 vertex).
//  kExtend - the cord tip is a slot on host's host_arm (shared vertex).
//  kMeet   - the cord tip meets the collinear tip of other's other_arm.
//  kMerge  - the cord tip is part of four-corner merge `merge`.
struct Tip {
  enum class Kind { kFree, kExtend, kMeet, kMerge };
  Kind kind = Kind::kFree;
  std::string other;       // kExtend: host rect; kMeet: the facing rect.
  Dir other_arm = Dir::N;  // kExtend / kMeet: the cord of `other` involved.
  int slot_index = -1;     // kExtend: index into the host arm's slot list.
  int merge = -1;          // kMerge: index into Skeleton::merges.
  friend bool operator==(const Tip&, const Tip&) = default;
};

struct Arm {
  // Contact slots ordered from the center towards the cord end.
  std::vector<Slot> slots;
  Tip tip;
  // Set by excess rewrites: the cord stops short of its rectangle corner and
  // no later rewrite may route a contact to its end.
  bool truncated = false;
};

struct PlusSkeleton {
  std::string id;
  std::array<Arm, 4> arms;  // indexed by dir_index
  Arm& arm(Dir d) { return arms[static_cast<std::size_t>(dir_index(d))]; }
  const Arm& arm(Dir d) const {
    return arms[static_cast<std::size_t>(dir_index(d))];
  }
};

// Four-corner merge point: the four cords ending at z share one vertex.
// `attached` drops to false for a participant whose cord an excess rewrite
// detached from the meeting.
struct Merge {
  Point z;
  std::array<std::string, 4> rect;  // bl, tl, tr, br
  std::array<Dir, 4> arm;           // N, E, S, W respectively
  std::array<bool, 4> attached = {true, true, true, true};
  int attached_count() const;
  // Position of `id` in rect[], or -1.
  int index_of(const std::string& id) const;
};

enum class ContactKind { kSlot, kTipMeet, kCornerMerge };

// One realized adjacency.  For kSlot, host/host_arm name the touched cord and
// extender/extender_arm the arriving cord.  For kTipMeet the two roles are
// interchangeable; host is the side owner (or the upper/left rect for
// diagonal meets).  For kCornerMerge, `at` is the merge point.
struct Contact {
  ContactKind kind = ContactKind::kSlot;
  std::string host;
  Dir host_arm = Dir::N;
  std::string extender;
  Dir extender_arm = Dir::N;
  Point at;  // kTipMeet / kCornerMerge location (informational)
};

struct Skeleton {
  std::vector<PlusSkeleton> pluses;
  std::vector<Merge> merges;
  std::vector<Contact> contacts;

  int find(const std::string& id) const;  // -1 if absent
  PlusSkeleton& at(const std::string& id);
  const PlusSkeleton& at(const std::string& id) const;
};

// Side membership used by the contact-assignment rule: members of each side
// of a host rect in clockwise order around the host (top: left to right,
// right: top to bottom, bottom: right to left, left: bottom to top).
struct SideList {
  std::string host;
  Dir side = Dir::N;
  std::vector<std::string> members;
};

// All side lists of the tiling, one per (host, side) with members, keyed by
// host id then side.  The host of an adjacency is the rect whose side
// interval contains the other's; on equal intervals the lower (horizontal
// contact) or left (vertical contact) rect hosts.
std::vector<SideList> side_lists(const Tiling& t);

// Centers and cords only; no contacts.
Skeleton build_cords(const Tiling& t);

// Designates and materializes every contact of contact_graph(t, corners).
// Side adjacencies follow the half-split rule: for the t members of a side in
// clockwise order, the first floor(t/2) attach their cord facing the side's
// clockwise-start corner to the host cord ending at that corner, the rest
// attach their cord facing the other corner to the host cord ending there.
// Adjacencies whose two designated cords end at a common four-corner point
// are realized by that point's merge.  A member cord demanded twice (its tip
// can make only one attachment) flips to the side's other designation form;
// afterwards each side's two groups are rebalanced back towards the
// half-split.  Throws std::runtime_error if demands cannot be made disjoint
// or a group deviates from its half by more than one.
void assign_contacts(const Tiling& t, Skeleton& sk);

// build_cords + assign_contacts.
Skeleton build_skeleton(const Tiling& t);

// Number of distinct contact points on each cord: interior slots plus one if
// the tip itself is attached (extension, tip meet, or merge).
std::array<int, 4> cord_counts(const Skeleton& sk, const std::string& rect);

// Balance check: every cord of every rect satisfies
//   cord_count <= ceil(deg(v)/2) + kBalanceSlack
// where deg is taken in contact_graph(t, corners=true).  Returns problem
// descriptions, empty when balanced.
inline constexpr int kBalanceSlack = 4;
std::vector<std::string> balance_problems(const Skeleton& sk,
                                          const Tiling& t);

// Internal consistency of cross-references (tips vs slots vs merges vs
// contacts); empty when coherent.  Used by tests and after excess rewrites.
std::vector<std::string> skeleton_problems(const Skeleton& sk);

}  // namespace plusdraw

#endif  // PLUSDRAW_SKELETON_HPP_
