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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dispersal {

/// A lattice point. Also used for relative offsets between points.
struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
  friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Cell operator-(Cell a) { return {-a.x, -a.y}; }
};

constexpr int manhattan(Cell a, Cell b) {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy;
}

std::string to_string(Cell c);

/// Compass directions in clockwise order. Up is +y, Right is +x.
enum class Direction : std::uint8_t { Up = 0, Right = 1, Down = 2, Left = 3 };

inline constexpr std::array<Direction, 4> kDirections = {
    Direction::Up, Direction::Right, Direction::Down, Direction::Left};

constexpr Direction rotate_cw(Direction d, int quarter_turns = 1) {
  const int q = ((static_cast<int>(d) + quarter_turns) % 4 + 4) % 4;
  return static_cast<Direction>(q);
}

constexpr Direction opposite(Direction d) { return rotate_cw(d, 2); }

constexpr Cell offset(Direction d) {
  switch (d) {
    case Direction::Up: return {0, 1};
    case Direction::Right: return {1, 0};
    case Direction::Down: return {0, -1};
    case Direction::Left: return {-1, 0};
  }
  return {0, 0};
}

/// The direction whose unit offset equals `delta`, if any.
std::optional<Direction> direction_of(Cell delta);

char to_char(Direction d);  // 'U', 'R', 'D', 'L'
std::optional<Direction> direction_from_char(char c);

struct Bounds {
  int min_x = 0;
  int min_y = 0;
  int max_x = 0;
  int max_y = 0;

  int width() const { return max_x - min_x + 1; }
  int height() const { return max_y - min_y + 1; }
  bool contains(Cell c) const {
    return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y;
  }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// A finite 4-connected set of lattice cells with a designated door.
/// Immutable once constructed; every constructor validates the invariants.
class Region {
 public:
  /// Throws Error{DisconnectedRegion} when the cells are not 4-connected and
  /// Error{DoorOutOfBounds} when the door is not one of them.
  static Region from_cells(std::vector<Cell> cells, Cell door);

  /// Parses the '#', '.', 'S' map format. Row 0 is the top (highest y); the
  /// result is translated so the tight bounding box starts at (0, 0).
  static Region from_ascii(std::string_view text);

  /// Tight bounding box, walls as '#', newline after every row.
  std::string to_ascii() const;

  bool contains(Cell c) const;
  bool is_wall(Cell c) const { return !contains(c); }

  /// Region cells at distance 1 from `v`, ordered Up, Right, Down, Left.
  std::vector<Cell> neighbors(Cell v) const;

  std::size_t size() const { return cells_.size(); }
  Cell door() const { return door_; }
  const Bounds& bounds() const { return bounds_; }

  /// Cells ordered top row first, left to right within a row.
  const std::vector<Cell>& cells() const { return cells_; }

  /// Position of `c` in cells(), or nullopt for walls.
  std::optional<std::size_t> index_of(Cell c) const;

  friend bool operator==(const Region& a, const Region& b) {
    return a.door_ == b.door_ && a.cells_ == b.cells_;
  }

 private:
  Region() = default;

  std::vector<Cell> cells_;
  Cell door_;
  Bounds bounds_;
  std::vector<std::int32_t> index_;  // bounds-sized, -1 for walls
};

}  // namespace dispersal
