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

#include "dispersal/engine.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_map>

#include "dispersal/error.hpp"

namespace dispersal {

Simulation::Simulation(Region region, const Strategy& strategy, std::uint64_t seed)
    : region_(std::move(region)), strategy_(&strategy), rng_(seed) {
  const auto& b = region_.bounds();
  const int pad = SensorView::kRadius;
  padded_ = {b.min_x - pad, b.min_y - pad, b.max_x + pad, b.max_y + pad};
  occupancy_.assign(static_cast<std::size_t>(padded_.width()) *
                        static_cast<std::size_t>(padded_.height()),
                    0);
  explored_.assign(region_.size(), false);
  parent_.assign(region_.size(), -1);
}

int& Simulation::robot_at(Cell c) {
  return occupancy_[static_cast<std::size_t>(c.y - padded_.min_y) *
                        static_cast<std::size_t>(padded_.width()) +
                    static_cast<std::size_t>(c.x - padded_.min_x)];
}

int Simulation::robot_at(Cell c) const {
  if (!padded_.contains(c)) return 0;
  return occupancy_[static_cast<std::size_t>(c.y - padded_.min_y) *
                        static_cast<std::size_t>(padded_.width()) +
                    static_cast<std::size_t>(c.x - padded_.min_x)];
}

bool Simulation::occupied(Cell c) const { return !region_.contains(c) || robot_at(c) != 0; }

SensorView Simulation::sense(Cell pos) const {
  return SensorView::from([&](Cell rel) { return occupied(pos + rel); });
}

int Simulation::add_robot(Cell pos, Lifecycle lifecycle) {
  if (!region_.contains(pos)) {
    throw Error(ErrorCode::CellNotInRegion, "cannot place a robot on wall " + to_string(pos));
  }
  if (robot_at(pos) != 0) {
    throw Error(ErrorCode::Collision, "cannot place a robot on occupied cell " + to_string(pos));
  }
  RobotState robot;
  robot.id = static_cast<int>(robots_.size()) + 1;
  robot.pos = pos;
  robot.prev_pos = pos;
  robot.lifecycle = lifecycle;
  robot.memory = strategy_->fresh_memory(rng_);
  robot_at(pos) = robot.id;
  const auto idx = *region_.index_of(pos);
  if (!explored_[idx]) {
    explored_[idx] = true;
    explore_order_.push_back(idx);
  }
  robots_.push_back(std::move(robot));
  return robots_.back().id;
}

std::vector<bool> Simulation::open_subtrees() const {
  std::vector<bool> open(region_.size(), false);
  for (std::size_t idx : explore_order_) {
    const int id = robot_at(region_.cells()[idx]);
    open[idx] = id == 0 || robots_[static_cast<std::size_t>(id - 1)].lifecycle == Lifecycle::Active;
  }
  for (auto it = explore_order_.rbegin(); it != explore_order_.rend(); ++it) {
    if (open[*it] && parent_[*it] >= 0) open[static_cast<std::size_t>(parent_[*it])] = true;
  }
  return open;
}

PeerSignals Simulation::signals_for(const RobotState& robot, const std::vector<bool>& open) const {
  PeerSignals s;
  const auto here = static_cast<std::int32_t>(*region_.index_of(robot.pos));
  auto active_at = [&](Cell c) {
    const int id = robot_at(c);
    return id != 0 && robots_[static_cast<std::size_t>(id - 1)].lifecycle == Lifecycle::Active;
  };
  for (Direction d : kDirections) {
    const Cell u = robot.pos + offset(d);
    const auto idx = region_.index_of(u);
    if (!idx) continue;
    const auto i = PeerSignals::at(d);
    const int occupant = robot_at(u);
    s.explored[i] = explored_[*idx];
    s.settled[i] = occupant != 0 &&
                   robots_[static_cast<std::size_t>(occupant - 1)].lifecycle == Lifecycle::Settled;
    s.child[i] = explored_[*idx] && parent_[*idx] == here;
    s.child_open[i] = s.child[i] && open[*idx];
    if (!explored_[*idx] && occupant == 0) {
      // The robot approaching from the earliest side in clockwise order wins.
      const auto mine = static_cast<int>(opposite(d));
      for (Direction other : kDirections) {
        if (static_cast<int>(other) < mine && active_at(u + offset(other))) s.contested[i] = true;
      }
    }
  }
  if (robot.id > 1) {
    const RobotState& pred = robots_[static_cast<std::size_t>(robot.id - 2)];
    if (pred.lifecycle == Lifecycle::Active) {
      s.has_predecessor = true;
      s.predecessor_prev = pred.prev_pos - robot.pos;
    }
  }
  return s;
}

StepRecord Simulation::step() {
  ++t_;
  const bool privileged = strategy_->privileged();
  std::vector<bool> open;
  if (privileged) open = open_subtrees();
  const Cell door = region_.door();
  const bool door_empty = robot_at(door) == 0;

  std::vector<std::optional<Decision>> decisions(robots_.size());
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    const RobotState& robot = robots_[i];
    if (robot.lifecycle != Lifecycle::Active) continue;
    const SensorView view = sense(robot.pos);
    decisions[i] = privileged ? strategy_->decide(view, signals_for(robot, open), robot.memory)
                              : strategy_->decide(view, robot.memory);
  }

  std::unordered_map<int, std::size_t> claims;
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    if (!decisions[i] || !decisions[i]->action.is_move()) continue;
    const RobotState& robot = robots_[i];
    const Cell target = robot.pos + offset(decisions[i]->action.dir);
    if (occupied(target)) {
      throw Error(ErrorCode::Collision,
                  "t=" + std::to_string(t_) + ": robot " + std::to_string(robot.id) + " at " +
                      to_string(robot.pos) + " moves " + to_char(decisions[i]->action.dir) +
                      " into occupied " + to_string(target));
    }
    const int key = (target.y - padded_.min_y) * padded_.width() + (target.x - padded_.min_x);
    const auto [it, fresh] = claims.emplace(key, i);
    if (!fresh) {
      throw Error(ErrorCode::Collision, "t=" + std::to_string(t_) + ": robots " +
                                            std::to_string(robots_[it->second].id) + " and " +
                                            std::to_string(robot.id) + " both move into " +
                                            to_string(target));
    }
  }

  StepRecord record;
  record.t = t_;
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    RobotState& robot = robots_[i];
    robot.prev_pos = robot.pos;
    if (!decisions[i]) continue;
    const Action action = decisions[i]->action;
    robot.memory = std::move(decisions[i]->memory);
    switch (action.kind) {
      case Action::Kind::Move: {
        const Cell from = robot.pos;
        robot.pos = from + offset(action.dir);
        robot_at(from) = 0;
        robot_at(robot.pos) = robot.id;
        ++robot.travel;
        ++robot.moves;
        const auto idx = *region_.index_of(robot.pos);
        if (!explored_[idx]) {
          explored_[idx] = true;
          parent_[idx] = static_cast<std::int32_t>(*region_.index_of(from));
          explore_order_.push_back(idx);
        }
        break;
      }
      case Action::Kind::Stay:
        ++robot.travel;
        break;
      case Action::Kind::Settle:
        robot.lifecycle = Lifecycle::Settled;
        break;
    }
  }

  // A robot that walked back onto the door blocks this step's arrival.
  if (door_empty && robot_at(door) == 0) record.spawned = add_robot(door);

  record.robots.reserve(robots_.size());
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    const RobotState& robot = robots_[i];
    RobotRecord r;
    r.id = robot.id;
    r.pos = robot.pos;
    r.state = robot.lifecycle;
    r.act = i < decisions.size() && decisions[i] ? decisions[i]->action : Action::stay();
    if (robot.lifecycle == Lifecycle::Active) r.heading = strategy_->heading(robot.memory);
    record.robots.push_back(r);
  }
  return record;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct ActiveSnapshot {
  std::vector<std::tuple<Cell, Cell, Memory>> robots;  // pos, prev_pos, memory
  friend bool operator==(const ActiveSnapshot&, const ActiveSnapshot&) = default;
};

std::uint64_t cell_key(Cell c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
         static_cast<std::uint32_t>(c.y);
}

}  // namespace

RunResult run(const Region& region, const Strategy& strategy, std::uint64_t seed,
              RunLimits limits) {
  const int max_steps = limits.max_steps.value_or(4 * static_cast<int>(region.size()));
  if (max_steps < 1) throw Error(ErrorCode::BadParameters, "max_steps must be at least 1");

  Simulation sim(region, strategy, seed);
  SimulationTrace trace{region, std::string(strategy.name()), seed, {}, {}};
  trace.steps.reserve(static_cast<std::size_t>(std::min(max_steps, 2 * static_cast<int>(region.size()))));

  // Robot count, settled count and explored count never decrease, so a
  // configuration can only repeat while all three are unchanged; the history
  // is cleared whenever one of them moves.
  std::tuple<std::size_t, std::size_t, std::size_t> progress{0, 0, 0};
  std::unordered_map<std::uint64_t, std::vector<ActiveSnapshot>> history;

  while (true) {
    trace.steps.push_back(sim.step());
    const int t = sim.time();
    if (sim.covered()) {
      trace.outcome = {Outcome::Kind::Covered, t};
      break;
    }

    std::size_t settled = 0;
    ActiveSnapshot snap;
    std::uint64_t h = 0;
    for (const RobotState& r : sim.robots()) {
      if (r.lifecycle == Lifecycle::Settled) {
        ++settled;
        continue;
      }
      snap.robots.emplace_back(r.pos, r.prev_pos, r.memory);
      h = mix(h, static_cast<std::uint64_t>(r.id));
      h = mix(h, cell_key(r.pos));
      h = mix(h, cell_key(r.prev_pos));
      h = mix(h, hash_memory(r.memory));
    }
    const std::tuple now{sim.robots().size(), settled, sim.explored_count()};
    if (now != progress) {
      progress = now;
      history.clear();
    }
    auto& bucket = history[h];
    if (std::find(bucket.begin(), bucket.end(), snap) != bucket.end()) {
      trace.outcome = {Outcome::Kind::Deadlock, t};
      break;
    }
    bucket.push_back(std::move(snap));

    if (t >= max_steps) {
      trace.outcome = {Outcome::Kind::StepLimit, t};
      break;
    }
  }
  RunMetrics metrics = compute_metrics(trace, region);
  return {std::move(trace), std::move(metrics)};
}

}  // namespace dispersal
