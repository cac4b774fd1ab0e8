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

#ifndef PLUSDRAW_CONSISTENCY_HPP_
#define PLUSDRAW_CONSISTENCY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "plusdraw/tiling.hpp"

namespace plusdraw {

// One application of the cut operation: the incomparable side-adjacent pair
// (p,q) becomes corner adjacent at the four-corner point z, and the opposite
// diagonal (excess_u, excess_v) becomes corner adjacent there as well.
// z is the point right after this cut; later cuts may translate it.
struct CutEvent {
  std::string p;
  std::string q;
  bool was_horizontal = false;  // adjacency orientation before the cut
  Point z;
  std::string excess_u;
  std::string excess_v;
};

// Applies one cut.  (u,v) must be a side-adjacent incomparable pair of the
// valid tiling t; throws std::invalid_argument otherwise.  All other side
// adjacencies survive with positive length; one new corner point appears.
// Runs in O(n).
std::pair<Tiling, CutEvent> apply_cut(const Tiling& t, const std::string& u,
                                      const std::string& v);

struct ConsistencyResult {
  Tiling tiling;
  std::vector<CutEvent> cuts;
  // One snapshot per cut (the tiling right after it); filled when requested.
  std::vector<Tiling> snapshots;
};

// Repeatedly cuts incomparable pairs (in lexicographic (min id, max id)
// order, re-checking each pair right before its cut since an earlier cut may
// already have made it comparable) until the tiling is consistent.  The input
// must be a valid tiling with no four-corner points.  O(n^2) overall.
ConsistencyResult make_consistent(const Tiling& input, bool with_trace = false);

}  // namespace plusdraw

#endif  // PLUSDRAW_CONSISTENCY_HPP_
