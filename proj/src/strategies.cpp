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

#include "dispersal/strategies.hpp"

#include <string>

#include "dispersal/error.hpp"

namespace dispersal {

bool SensorView::occupied(Cell rel) const {
  for (std::size_t i = 0; i < kOffsets.size(); ++i) {
    if (kOffsets[i] == rel) return (bits_ >> i) & 1u;
  }
  throw Error(ErrorCode::BadParameters, "offset " + to_string(rel) + " is outside the sensing range");
}

int SensorView::free_neighbor_count() const {
  int n = 0;
  for (std::size_t i = 0; i < 4; ++i) n += ((bits_ >> i) & 1u) ? 0 : 1;
  return n;
}

char to_char(Action a) {
  switch (a.kind) {
    case Action::Kind::Move: return to_char(a.dir);
    case Action::Kind::Stay: return '.';
    case Action::Kind::Settle: return 'X';
  }
  return '?';
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t pack(std::optional<Cell> c) {
  if (!c) return 0xffff;
  return (static_cast<std::uint64_t>(c->x + 128) << 8) | static_cast<std::uint64_t>(c->y + 128);
}

std::uint64_t pack(std::optional<Direction> d) {
  return d ? static_cast<std::uint64_t>(*d) : 7;
}

std::optional<Direction> first_free_clockwise(const SensorView& view) {
  for (Direction d : kDirections) {
    if (view.free(d)) return d;
  }
  return std::nullopt;
}

// Shifts the remembered positions after stepping in `d`.
template <class M>
void record_move(M& m, Direction d) {
  m.prev_prev = m.prev ? std::optional<Cell>(*m.prev - offset(d)) : std::nullopt;
  m.prev = -offset(d);
  m.has_moved = true;
}

Decision fcdfs_move(FcdfsMemory m, Direction d) {
  record_move(m, d);
  return {Action::move(d), m};
}

// True when the robot sits on a corner of the residual region as far as its
// sensors and history can tell: a dead end back to where it came from, or an
// L-bend whose diagonal is free or was its own position two steps ago.
template <class M>
bool detects_corner(const SensorView& view, const M& m) {
  if (!m.prev) return false;
  std::array<Direction, 4> free{};
  int n = 0;
  for (Direction d : kDirections) {
    if (view.free(d)) free[static_cast<std::size_t>(n++)] = d;
  }
  const auto back = direction_of(*m.prev);
  if (!back || view.occupied(*back)) return false;
  if (n == 1) return true;
  if (n != 2 || free[1] == opposite(free[0])) return false;
  const Cell diag = offset(free[0]) + offset(free[1]);
  return !view.occupied(diag) || (m.prev_prev && *m.prev_prev == diag);
}

Direction pick(std::uint64_t& rng, const std::array<Direction, 4>& options, int count) {
  return options[static_cast<std::size_t>(splitmix64(rng) % static_cast<std::uint64_t>(count))];
}

}  // namespace

std::uint64_t hash_memory(const Memory& memory) {
  std::uint64_t h = memory.index() + 1;
  std::visit(
      [&h](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FcdfsMemory>) {
          h = mix(h, pack(m.primary));
          h = mix(h, pack(m.prev));
          h = mix(h, pack(m.prev_prev));
          h = mix(h, m.has_moved);
        } else if constexpr (std::is_same_v<T, FiveBitMemory>) {
          h = mix(h, m.bits);
        } else if constexpr (std::is_same_v<T, RandCornerMemory>) {
          h = mix(h, pack(m.base.primary));
          h = mix(h, pack(m.base.prev));
          h = mix(h, pack(m.base.prev_prev));
          h = mix(h, m.base.has_moved);
          h = mix(h, m.draw);
        } else if constexpr (std::is_same_v<T, LeftHandMemory>) {
          h = mix(h, pack(m.heading));
          h = mix(h, pack(m.prev));
          h = mix(h, pack(m.prev_prev));
          h = mix(h, (m.wall_on_left ? 2u : 0u) | (m.has_moved ? 1u : 0u));
        } else if constexpr (std::is_same_v<T, BaselineMemory>) {
          h = mix(h, m.rng);
          h = mix(h, pack(m.heading));
        }
      },
      memory);
  return h;
}

Decision fcdfs_decide(const SensorView& view, FcdfsMemory m) {
  if (view.free_neighbor_count() == 0) return {Action::settle(), m};
  if (!m.has_moved) m.primary = first_free_clockwise(view);

  const Direction primary = *m.primary;
  const Direction secondary = rotate_cw(primary);
  if (view.free(primary)) return fcdfs_move(m, primary);
  if (view.free(secondary)) return fcdfs_move(m, secondary);

  // Corner or hall. A dead end has no diagonal, so it is settled first.
  if (view.free_neighbor_count() == 1 && m.prev) {
    const auto back = direction_of(*m.prev);
    if (back && view.free(*back)) return {Action::settle(), m};
  }
  const Cell diag = diagonal_offset(primary);
  if ((m.prev_prev && *m.prev_prev == diag) || !view.occupied(diag)) {
    return {Action::settle(), m};
  }
  for (Direction d : kDirections) {
    if (view.free(d) && (!m.prev || offset(d) != *m.prev)) {
      m.primary = d;
      return fcdfs_move(m, d);
    }
  }
  throw Error(ErrorCode::NoLegalAction, "fcdfs: blocked at a hall with no unvisited neighbour");
}

Decision fcdfs5_decide(const SensorView& view, FiveBitMemory m) {
  auto settle = [&m]() {
    m.set_b3b4b5(0b011);
    return Decision{Action::settle(), m};
  };
  bool counter_set = false;

  if (view.free_neighbor_count() == 0) return settle();
  if (m.b4b5() == 0b00) {
    m.set_primary(*first_free_clockwise(view));
    m.set_b4b5(0b10);
    counter_set = true;
  }

  if (!view.free(m.primary()) && !view.free(rotate_cw(m.primary()))) {
    if (view.free_neighbor_count() == 1) return settle();
    const bool diagonal_was_ours = m.b5() && (m.b3() + m.b4() == 1);
    if (diagonal_was_ours || !view.occupied(diagonal_offset(m.primary()))) return settle();
    // Hall: leave by the free side that is not where the last step came from.
    const Direction last = m.b3() ? rotate_cw(m.primary()) : m.primary();
    for (Direction d : kDirections) {
      if (view.free(d) && d != opposite(last)) {
        m.set_primary(d);
        break;
      }
    }
    m.set_b4b5(0b10);
    counter_set = true;
  }

  if (!counter_set) m.set_b4b5(static_cast<std::uint8_t>((m.b3() ? 0b10 : 0b00) | 0b01));

  const Direction primary = m.primary();
  if (view.free(primary)) {
    m.set_b3(false);
    return {Action::move(primary), m};
  }
  if (view.free(rotate_cw(primary))) {
    m.set_b3(true);
    return {Action::move(rotate_cw(primary)), m};
  }
  return settle();
}

Decision rand_corner_decide(const SensorView& view, RandCornerMemory m) {
  FcdfsMemory& base = m.base;
  if (view.free_neighbor_count() == 0) return {Action::settle(), m};
  if (!base.has_moved) {
    std::array<Direction, 4> free{};
    int n = 0;
    for (Direction d : kDirections) {
      if (view.free(d)) free[static_cast<std::size_t>(n++)] = d;
    }
    base.primary = free[m.draw % static_cast<std::uint32_t>(n)];
  } else if (detects_corner(view, base)) {
    return {Action::settle(), m};
  }

  const Direction primary = *base.primary;
  for (Direction d : {primary, rotate_cw(primary)}) {
    if (view.free(d)) {
      record_move(base, d);
      return {Action::move(d), m};
    }
  }
  for (Direction d : kDirections) {
    if (view.free(d) && (!base.prev || offset(d) != *base.prev)) {
      base.primary = d;
      record_move(base, d);
      return {Action::move(d), m};
    }
  }
  throw Error(ErrorCode::NoLegalAction, "rand-corner: blocked at a hall with no unvisited neighbour");
}

Decision left_hand_decide(const SensorView& view, LeftHandMemory m) {
  if (view.free_neighbor_count() == 0) return {Action::settle(), m};
  Direction next;
  if (!m.has_moved) {
    next = *first_free_clockwise(view);
  } else {
    if (detects_corner(view, m)) return {Action::settle(), m};
    const Direction h = *m.heading;
    const Direction left = rotate_cw(h, 3);
    if (m.wall_on_left && view.free(left)) {
      next = left;
    } else if (view.free(h)) {
      next = h;
    } else if (view.free(rotate_cw(h))) {
      next = rotate_cw(h);
    } else if (view.free(left)) {
      next = left;
    } else {
      next = opposite(h);
    }
  }
  m.wall_on_left = view.occupied(rotate_cw(next, 3));
  m.heading = next;
  record_move(m, next);
  return {Action::move(next), m};
}

Decision dflf_decide(const SensorView& view, const PeerSignals& signals, BaselineMemory m) {
  if (signals.has_predecessor) {
    // Follower: step into the cell the predecessor occupied one step ago.
    if (signals.predecessor_prev) {
      const auto d = direction_of(*signals.predecessor_prev);
      if (d && view.free(*d)) {
        m.heading = d;
        return {Action::move(*d), m};
      }
    }
    return {Action::stay(), m};
  }
  // Leader: depth-first into unexplored cells, keeping its heading when it
  // can; settles once every neighbour has been explored.
  std::array<Direction, 4> options{};
  int n = 0;
  for (Direction d : kDirections) {
    if (view.free(d) && !signals.explored[PeerSignals::at(d)]) {
      options[static_cast<std::size_t>(n++)] = d;
    }
  }
  if (n == 0) return {Action::settle(), m};
  Direction next = options[0];
  bool straight = false;
  for (int i = 0; i < n; ++i) straight |= m.heading && options[static_cast<std::size_t>(i)] == *m.heading;
  next = straight ? *m.heading : pick(m.rng, options, n);
  m.heading = next;
  return {Action::move(next), m};
}

Decision bflf_decide(const SensorView& view, const PeerSignals& signals, BaselineMemory m) {
  std::array<Direction, 4> options{};
  int n = 0;
  bool waiting = false;
  for (Direction d : kDirections) {
    const auto i = PeerSignals::at(d);
    if (view.free(d) && !signals.explored[i]) {
      if (signals.contested[i]) {
        waiting = true;
      } else {
        options[static_cast<std::size_t>(n++)] = d;
      }
    }
  }
  if (n == 0) {
    for (Direction d : kDirections) {
      const auto i = PeerSignals::at(d);
      if (signals.child[i] && signals.child_open[i]) {
        if (view.free(d)) {
          options[static_cast<std::size_t>(n++)] = d;
        } else {
          waiting = true;
        }
      }
    }
  }
  if (n > 0) {
    const Direction next = pick(m.rng, options, n);
    m.heading = next;
    return {Action::move(next), m};
  }
  return {waiting ? Action::stay() : Action::settle(), m};
}

namespace {

template <class M>
const M& as(const Memory& memory, std::string_view who) {
  if (const auto* m = std::get_if<M>(&memory)) return *m;
  throw Error(ErrorCode::BadParameters, std::string(who) + ": memory of the wrong strategy");
}

class FcdfsStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "fcdfs"; }
  Memory fresh_memory(std::mt19937_64&) const override { return FcdfsMemory{}; }
  Decision decide(const SensorView& view, const Memory& memory) const override {
    return fcdfs_decide(view, as<FcdfsMemory>(memory, name()));
  }
  std::optional<Direction> heading(const Memory& memory) const override {
    return as<FcdfsMemory>(memory, name()).primary;
  }
  bool checks_fcdfs_invariants() const override { return true; }
};

class FiveBitStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "fcdfs5"; }
  Memory fresh_memory(std::mt19937_64&) const override { return FiveBitMemory{}; }
  Decision decide(const SensorView& view, const Memory& memory) const override {
    return fcdfs5_decide(view, as<FiveBitMemory>(memory, name()));
  }
  std::optional<Direction> heading(const Memory& memory) const override {
    const auto& m = as<FiveBitMemory>(memory, name());
    if (m.b4b5() == 0b00) return std::nullopt;
    return m.primary();
  }
  bool checks_fcdfs_invariants() const override { return true; }
};

class RandCornerStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "rand-corner"; }
  Memory fresh_memory(std::mt19937_64& rng) const override {
    return RandCornerMemory{{}, static_cast<std::uint32_t>(rng() >> 32)};
  }
  Decision decide(const SensorView& view, const Memory& memory) const override {
    return rand_corner_decide(view, as<RandCornerMemory>(memory, name()));
  }
  std::optional<Direction> heading(const Memory& memory) const override {
    return as<RandCornerMemory>(memory, name()).base.primary;
  }
};

class LeftHandStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "left-hand"; }
  Memory fresh_memory(std::mt19937_64&) const override { return LeftHandMemory{}; }
  Decision decide(const SensorView& view, const Memory& memory) const override {
    return left_hand_decide(view, as<LeftHandMemory>(memory, name()));
  }
  std::optional<Direction> heading(const Memory& memory) const override {
    return as<LeftHandMemory>(memory, name()).heading;
  }
};

template <Decision (*Rule)(const SensorView&, const PeerSignals&, BaselineMemory)>
class BaselineStrategy final : public Strategy {
 public:
  explicit BaselineStrategy(std::string_view name) : name_(name) {}
  std::string_view name() const override { return name_; }
  Memory fresh_memory(std::mt19937_64& rng) const override { return BaselineMemory{rng(), {}}; }
  Decision decide(const SensorView&, const Memory&) const override {
    throw Error(ErrorCode::BadParameters, std::string(name_) + " needs the leader-follower channel");
  }
  bool privileged() const override { return true; }
  Decision decide(const SensorView& view, const PeerSignals& signals,
                  const Memory& memory) const override {
    return Rule(view, signals, as<BaselineMemory>(memory, name_));
  }
  std::optional<Direction> heading(const Memory& memory) const override {
    return as<BaselineMemory>(memory, name_).heading;
  }

 private:
  std::string_view name_;
};

}  // namespace

const std::vector<std::string_view>& strategy_names() {
  static const std::vector<std::string_view> kNames = {"fcdfs", "fcdfs5", "rand-corner",
                                                       "left-hand", "dflf", "bflf"};
  return kNames;
}

std::unique_ptr<Strategy> make_strategy(std::string_view name) {
  if (name == "fcdfs") return std::make_unique<FcdfsStrategy>();
  if (name == "fcdfs5") return std::make_unique<FiveBitStrategy>();
  if (name == "rand-corner") return std::make_unique<RandCornerStrategy>();
  if (name == "left-hand") return std::make_unique<LeftHandStrategy>();
  if (name == "dflf") return std::make_unique<BaselineStrategy<&dflf_decide>>("dflf");
  if (name == "bflf") return std::make_unique<BaselineStrategy<&bflf_decide>>("bflf");
  throw Error(ErrorCode::UnknownStrategy, "unknown strategy '" + std::string(name) + "'");
}

}  // namespace dispersal
