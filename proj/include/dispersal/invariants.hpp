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

#include <string>
#include <string_view>
#include <vector>

#include "dispersal/trace.hpp"

namespace dispersal {

enum class ViolationKind : std::uint8_t {
  Collision,        // two robots on one cell
  Stay,             // an active robot paused
  Spacing,          // active robots i < j closer than 2(j - i)
  FollowTheLeader,  // robot i+1 did not step onto robot i's previous cell
  SettleOffCorner,  // settled on a cell that is not a corner of R(t)
  RedirectOffHall,  // changed heading away from a hall of R(t)
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  int t = 0;
  ViolationKind kind = ViolationKind::Collision;
  std::string detail;
};

/// Replays a recorded trace and reports every broken invariant. Collisions
/// are always checked; the depth-first rules (no pauses, 2(j - i) spacing,
/// follow-the-leader, settling at corners and turning at halls of the
/// residual region) only when `depth_first_rules` is set and the region is
/// simply connected, since they do not hold elsewhere.
std::vector<Violation> check_trace(const SimulationTrace& trace, bool depth_first_rules);

}  // namespace dispersal
