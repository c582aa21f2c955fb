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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <variant>

#include "dispersal/grid.hpp"

namespace dispersal {

/// What a robot sees: occupancy of the 12 cells at Manhattan distance 1 or
/// 2. Walls, settled robots and active robots all read as "occupied".
class SensorView {
 public:
  static constexpr int kRadius = 2;
  static constexpr std::array<Cell, 12> kOffsets = {{
      {0, 1}, {1, 0}, {0, -1}, {-1, 0},             // distance 1, clockwise from Up
      {0, 2}, {1, 1}, {2, 0}, {1, -1},              // distance 2, clockwise from Up
      {0, -2}, {-1, -1}, {-2, 0}, {-1, 1},
  }};

  SensorView() = default;

  /// Builds a view from an occupancy predicate over relative offsets.
  template <class Occupied>
  static SensorView from(Occupied&& occupied) {
    SensorView v;
    for (std::size_t i = 0; i < kOffsets.size(); ++i) {
      if (occupied(kOffsets[i])) v.bits_ |= static_cast<std::uint16_t>(1u << i);
    }
    return v;
  }

  /// `rel` must be one of kOffsets.
  bool occupied(Cell rel) const;
  bool occupied(Direction d) const { return occupied(offset(d)); }
  bool free(Direction d) const { return !occupied(d); }
  int free_neighbor_count() const;

  std::uint16_t bits() const { return bits_; }
  friend bool operator==(const SensorView&, const SensorView&) = default;

 private:
  std::uint16_t bits_ = 0;
};

struct Action {
  enum class Kind : std::uint8_t { Move, Stay, Settle };

  Kind kind = Kind::Stay;
  Direction dir = Direction::Up;  // meaningful for Move only

  static Action move(Direction d) { return {Kind::Move, d}; }
  static Action stay() { return {Kind::Stay, Direction::Up}; }
  static Action settle() { return {Kind::Settle, Direction::Up}; }

  bool is_move() const { return kind == Kind::Move; }
  friend bool operator==(const Action& a, const Action& b) {
    return a.kind == b.kind && (a.kind != Kind::Move || a.dir == b.dir);
  }
};

/// Trace code: U/R/D/L for moves, '.' for stay, 'X' for settle.
char to_char(Action a);

/// Position history for the full-memory rule: offsets are relative to the
/// robot's current cell and shift with every move.
struct FcdfsMemory {
  std::optional<Direction> primary;
  std::optional<Cell> prev;
  std::optional<Cell> prev_prev;
  bool has_moved = false;

  friend bool operator==(const FcdfsMemory&, const FcdfsMemory&) = default;
};

/// The 5-bit automaton state b1b2b3b4b5, stored as b1 in bit 4 down to b5 in
/// bit 0. All bits start at zero.
struct FiveBitMemory {
  std::uint8_t bits = 0;

  Direction primary() const { return static_cast<Direction>((bits >> 3) & 0x3); }
  bool b3() const { return (bits >> 2) & 1; }
  bool b4() const { return (bits >> 1) & 1; }
  bool b5() const { return bits & 1; }
  std::uint8_t b4b5() const { return bits & 0x3; }
  std::uint8_t b3b4b5() const { return bits & 0x7; }
  bool settled() const { return b3b4b5() == 0b011; }

  void set_primary(Direction d) {
    bits = static_cast<std::uint8_t>((bits & 0x07) | (static_cast<unsigned>(d) << 3));
  }
  void set_b3(bool v) { bits = static_cast<std::uint8_t>((bits & ~0x4u) | (v ? 0x4u : 0u)); }
  void set_b4b5(std::uint8_t v) { bits = static_cast<std::uint8_t>((bits & ~0x3u) | (v & 0x3u)); }
  void set_b3b4b5(std::uint8_t v) { bits = static_cast<std::uint8_t>((bits & ~0x7u) | (v & 0x7u)); }

  friend bool operator==(const FiveBitMemory&, const FiveBitMemory&) = default;
};

/// Random-initial-direction variant: FCDFS history plus one draw taken from
/// the run's generator when the robot appears.
struct RandCornerMemory {
  FcdfsMemory base;
  std::uint32_t draw = 0;

  friend bool operator==(const RandCornerMemory&, const RandCornerMemory&) = default;
};

struct LeftHandMemory {
  std::optional<Direction> heading;
  std::optional<Cell> prev;
  std::optional<Cell> prev_prev;
  bool wall_on_left = false;
  bool has_moved = false;

  friend bool operator==(const LeftHandMemory&, const LeftHandMemory&) = default;
};

/// Leader-follower baselines keep a private tie-break generator.
struct BaselineMemory {
  std::uint64_t rng = 0;
  std::optional<Direction> heading;

  friend bool operator==(const BaselineMemory&, const BaselineMemory&) = default;
};

using Memory = std::variant<std::monostate, FcdfsMemory, FiveBitMemory, RandCornerMemory,
                            LeftHandMemory, BaselineMemory>;

std::uint64_t hash_memory(const Memory& m);

/// Extra per-step information the engine hands to privileged baselines only.
/// Local-rule strategies never see it.
struct PeerSignals {
  std::array<bool, 4> explored{};    // neighbour cell has ever held a robot
  std::array<bool, 4> settled{};     // neighbour holds a settled robot
  std::array<bool, 4> child{};       // neighbour is a child in the exploration tree
  std::array<bool, 4> child_open{};  // that child's subtree still has an unsettled cell
  std::array<bool, 4> contested{};   // unexplored neighbour also adjacent to a robot with priority
  bool has_predecessor = false;      // the robot that arrived just before is active
  std::optional<Cell> predecessor_prev;  // its position one step ago, relative to us

  static std::size_t at(Direction d) { return static_cast<std::size_t>(d); }
};

struct Decision {
  Action action;
  Memory memory;
};

/// A decision rule. Local strategies are pure functions of the sensor view
/// and their own memory; the engine enforces this by passing nothing else.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string_view name() const = 0;

  /// Memory for a robot that has just appeared at the door. Only randomised
  /// strategies touch `rng`.
  virtual Memory fresh_memory(std::mt19937_64& rng) const = 0;

  virtual Decision decide(const SensorView& view, const Memory& memory) const = 0;

  /// Baselines granted the leader-follower channel.
  virtual bool privileged() const { return false; }
  virtual Decision decide(const SensorView& view, const PeerSignals& /*signals*/,
                          const Memory& memory) const {
    return decide(view, memory);
  }

  /// Primary direction (heading) of an active robot, for rendering and the
  /// hall-redirect check.
  virtual std::optional<Direction> heading(const Memory& memory) const = 0;

  /// True for rules whose optimality invariants `--check` verifies.
  virtual bool checks_fcdfs_invariants() const { return false; }
};

}  // namespace dispersal
