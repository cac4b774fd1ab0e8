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

#ifndef PLUSDRAW_GENERATOR_HPP_
#define PLUSDRAW_GENERATOR_HPP_

#include <cstdint>
#include <utility>

#include "plusdraw/graph.hpp"
#include "plusdraw/tiling.hpp"

namespace plusdraw {

// Random guillotine dissection with n rects inside an n x n square.  The
// result is a valid tiling and may contain incomparable pairs; it is emitted
// as built.  Deterministic per (n, seed).
Tiling gen_slicing(int n, std::uint64_t seed);

// k copies of a fixed 9-rect pinwheel unit (an 8-rect ring whose alternating
// members partially overlap the center square) laid out left to right with a
// full-height spacer column between consecutive units so that no four rects
// meet in a point.  10k-1 rects and exactly 4k incomparable pairs.
Tiling gen_windmill(int k);

// Random rectangular dual with n rects and its contact graph: guillotine-style
// local splits, rejecting any split that would create a four-corner point
// (doubling all coordinates when no acceptable split is found).
// Deterministic per (n, seed); the tiling passes is_rectangular_dual against
// the returned graph.
std::pair<Tiling, Graph> gen_dual_instance(int n, std::uint64_t seed);

}  // namespace plusdraw

#endif  // PLUSDRAW_GENERATOR_HPP_
