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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dispersal/metrics.hpp"
#include "dispersal/model.hpp"
#include "dispersal/trace.hpp"

namespace dispersal {

struct RobotState {
  int id = 0;  // arrival order, from 1
  Cell pos;
  Cell prev_pos;  // position at the beginning of the previous step
  Lifecycle lifecycle = Lifecycle::Active;
  Memory memory;
  std::int64_t travel = 0;
  std::int64_t moves = 0;
};

/// Synchronous Look-Compute-Move scheduler for one run.
///
/// Each step takes an occupancy snapshot, lets every active robot decide from
/// its own sensor view and memory, applies all actions at once and finally
/// spawns a robot at the door if the door was empty in the snapshot. A move
/// is legal only into a cell that was empty in the snapshot; anything else
/// raises Error{Collision}.
class Simulation {
 public:
  Simulation(Region region, const Strategy& strategy, std::uint64_t seed);
  Simulation(Region, const Strategy&&, std::uint64_t) = delete;  // strategy must outlive the run

  const Region& region() const { return region_; }
  const std::vector<RobotState>& robots() const { return robots_; }
  int time() const { return t_; }
  bool covered() const { return robots_.size() == region_.size(); }
  std::size_t explored_count() const { return explore_order_.size(); }

  /// View of the robot standing at `pos`, from the current configuration.
  SensorView sense(Cell pos) const;

  /// Places a robot directly, for scenario set-up. Returns its id.
  int add_robot(Cell pos, Lifecycle lifecycle = Lifecycle::Active);

  StepRecord step();

 private:
  bool occupied(Cell c) const;
  int& robot_at(Cell c);
  int robot_at(Cell c) const;
  PeerSignals signals_for(const RobotState& robot, const std::vector<bool>& open) const;
  std::vector<bool> open_subtrees() const;

  Region region_;
  const Strategy* strategy_;
  std::mt19937_64 rng_;
  int t_ = 0;
  std::vector<RobotState> robots_;
  Bounds padded_;
  std::vector<int> occupancy_;  // robot id per padded cell, 0 when empty

  // Exploration bookkeeping for privileged strategies.
  std::vector<bool> explored_;
  std::vector<std::int32_t> parent_;
  std::vector<std::size_t> explore_order_;
};

struct RunLimits {
  std::optional<int> max_steps;  // default 4 * V
};

struct RunResult {
  SimulationTrace trace;
  RunMetrics metrics;
};

/// Steps until full coverage, a repeated global configuration (deadlock) or
/// the step limit.
RunResult run(const Region& region, const Strategy& strategy, std::uint64_t seed,
              RunLimits limits = {});

}  // namespace dispersal
