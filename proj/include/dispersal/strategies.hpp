// Copyright 2026 The Dispersal Authors
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

#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "dispersal/model.hpp"

namespace dispersal {

/// Find-Corner DFS with full position memory.
Decision fcdfs_decide(const SensorView& view, FcdfsMemory m);

/// The same rule as a 5-bit automaton.
Decision fcdfs5_decide(const SensorView& view, FiveBitMemory m);

/// No shared compass: the initial primary is drawn uniformly from the free
/// directions and the robot settles at the first corner it detects.
Decision rand_corner_decide(const SensorView& view, RandCornerMemory m);

/// Boundary following with the left hand on the wall.
Decision left_hand_decide(const SensorView& view, LeftHandMemory m);

/// Depth-first leader-follower (privileged).
Decision dflf_decide(const SensorView& view, const PeerSignals& signals, BaselineMemory m);

/// Breadth-first leader-follower (privileged).
Decision bflf_decide(const SensorView& view, const PeerSignals& signals, BaselineMemory m);

/// Cell diagonal to a robot whose primary and secondary are blocked: 135
/// degrees counter-clockwise from the primary.
constexpr Cell diagonal_offset(Direction primary) {
  return offset(opposite(primary)) + offset(rotate_cw(primary, 3));
}

/// Registry names: fcdfs, fcdfs5, rand-corner, left-hand, dflf, bflf.
/// Throws Error{UnknownStrategy}.
std::unique_ptr<Strategy> make_strategy(std::string_view name);

const std::vector<std::string_view>& strategy_names();

}  // namespace dispersal
