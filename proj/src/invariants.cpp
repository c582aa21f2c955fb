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

#include "dispersal/invariants.hpp"

#include <unordered_set>

#include "dispersal/topology.hpp"

namespace dispersal {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Collision: return "collision";
    case ViolationKind::Stay: return "stay";
    case ViolationKind::Spacing: return "spacing";
    case ViolationKind::FollowTheLeader: return "follow-the-leader";
    case ViolationKind::SettleOffCorner: return "settle-off-corner";
    case ViolationKind::RedirectOffHall: return "redirect-off-hall";
  }
  return "collision";
}

namespace {

std::uint64_t key(Cell c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
         static_cast<std::uint32_t>(c.y);
}

std::string robot(int id) { return "robot " + std::to_string(id); }

// Robot `id` as recorded at the end of step s, or null. Step 0 is empty.
const RobotRecord* find(const SimulationTrace& trace, int s, int id) {
  if (s < 1) return nullptr;
  const auto& robots = trace.steps[static_cast<std::size_t>(s - 1)].robots;
  if (id < 1 || static_cast<std::size_t>(id) > robots.size()) return nullptr;
  const RobotRecord& r = robots[static_cast<std::size_t>(id - 1)];
  return r.id == id ? &r : nullptr;
}

}  // namespace

std::vector<Violation> check_trace(const SimulationTrace& trace, bool depth_first_rules) {
  std::vector<Violation> out;
  const Region& region = trace.region;
  const bool structural = depth_first_rules && is_simply_connected(region);
  std::optional<DistanceTable> dist;
  if (structural) dist.emplace(region);

  for (const StepRecord& step : trace.steps) {
    const int t = step.t;
    std::unordered_set<std::uint64_t> seen;
    for (const RobotRecord& r : step.robots) {
      if (!seen.insert(key(r.pos)).second) {
        out.push_back({t, ViolationKind::Collision, robot(r.id) + " shares " + to_string(r.pos)});
      }
    }
    if (!structural) continue;

    // Residual region at the beginning of the step.
    std::unordered_set<std::uint64_t> settled_before;
    if (t > 1) {
      for (const RobotRecord& r : trace.steps[static_cast<std::size_t>(t - 2)].robots) {
        if (r.state == Lifecycle::Settled) settled_before.insert(key(r.pos));
      }
    }
    const CellPredicate residual = [&](Cell c) {
      return region.contains(c) && !settled_before.contains(key(c));
    };

    std::vector<const RobotRecord*> active;
    for (const RobotRecord& r : step.robots) {
      const RobotRecord* before = find(trace, t - 1, r.id);
      const bool acted = before && before->state == Lifecycle::Active;
      if (acted && r.act == Action::stay()) {
        out.push_back({t, ViolationKind::Stay, robot(r.id) + " paused at " + to_string(r.pos)});
      }
      if (acted && r.act == Action::settle() &&
          classify_in(residual, before->pos).kind != VertexKind::Corner) {
        out.push_back({t, ViolationKind::SettleOffCorner,
                       robot(r.id) + " settled at " + to_string(before->pos)});
      }
      if (acted && r.state == Lifecycle::Active && before->heading && r.heading &&
          *before->heading != *r.heading &&
          classify_in(residual, before->pos).kind != VertexKind::Hall) {
        out.push_back({t, ViolationKind::RedirectOffHall,
                       robot(r.id) + " turned at " + to_string(before->pos)});
      }
      if (r.state == Lifecycle::Active) active.push_back(&r);
    }

    for (std::size_t a = 0; a < active.size(); ++a) {
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        const int gap = 2 * (active[b]->id - active[a]->id);
        const int d = (*dist)(active[a]->pos, active[b]->pos);
        if (d < gap) {
          out.push_back({t, ViolationKind::Spacing,
                         robot(active[a]->id) + " and " + robot(active[b]->id) + " at distance " +
                             std::to_string(d) + " < " + std::to_string(gap)});
        }
      }
    }

    // next(A_{i+1}) = prev(A_i) whenever A_i is active at the beginning of t.
    if (t > 1) {
      for (const RobotRecord& leader : trace.steps[static_cast<std::size_t>(t - 2)].robots) {
        if (leader.state != Lifecycle::Active) continue;
        const RobotRecord* follower = find(trace, t, leader.id + 1);
        const RobotRecord* prev = find(trace, t - 2, leader.id);
        if (!follower || !prev) continue;
        if (follower->pos != prev->pos) {
          out.push_back({t, ViolationKind::FollowTheLeader,
                         robot(follower->id) + " at " + to_string(follower->pos) +
                             " instead of " + to_string(prev->pos)});
        }
      }
    }
  }
  return out;
}

}  // namespace dispersal
