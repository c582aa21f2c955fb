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

#include "dispersal/grid.hpp"

#include <algorithm>
#include <deque>

#include "dispersal/error.hpp"

namespace dispersal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedMap: return "MalformedMap";
    case ErrorCode::NoDoor: return "NoDoor";
    case ErrorCode::MultipleDoors: return "MultipleDoors";
    case ErrorCode::DisconnectedRegion: return "DisconnectedRegion";
    case ErrorCode::CellNotInRegion: return "CellNotInRegion";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::DoorOutOfBounds: return "DoorOutOfBounds";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::Collision: return "CollisionError";
    case ErrorCode::NoLegalAction: return "NoLegalAction";
    case ErrorCode::UnknownStrategy: return "UnknownStrategy";
    case ErrorCode::TraceRegionMismatch: return "TraceRegionMismatch";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::BadTrace: return "BadTrace";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

std::string to_string(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::optional<Direction> direction_of(Cell delta) {
  for (Direction d : kDirections) {
    if (offset(d) == delta) return d;
  }
  return std::nullopt;
}

char to_char(Direction d) {
  static constexpr std::array<char, 4> kChars = {'U', 'R', 'D', 'L'};
  return kChars[static_cast<std::size_t>(d)];
}

std::optional<Direction> direction_from_char(char c) {
  switch (c) {
    case 'U': return Direction::Up;
    case 'R': return Direction::Right;
    case 'D': return Direction::Down;
    case 'L': return Direction::Left;
    default: return std::nullopt;
  }
}

namespace {

bool row_major_top_first(Cell a, Cell b) {
  return a.y != b.y ? a.y > b.y : a.x < b.x;
}

}  // namespace

Region Region::from_cells(std::vector<Cell> cells, Cell door) {
  if (cells.empty()) {
    throw Error(ErrorCode::DisconnectedRegion, "region has no cells");
  }
  std::sort(cells.begin(), cells.end(), row_major_top_first);
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  Region r;
  r.bounds_ = {cells.front().x, cells.front().y, cells.front().x, cells.front().y};
  for (Cell c : cells) {
    r.bounds_.min_x = std::min(r.bounds_.min_x, c.x);
    r.bounds_.max_x = std::max(r.bounds_.max_x, c.x);
    r.bounds_.min_y = std::min(r.bounds_.min_y, c.y);
    r.bounds_.max_y = std::max(r.bounds_.max_y, c.y);
  }
  const auto w = static_cast<std::size_t>(r.bounds_.width());
  const auto h = static_cast<std::size_t>(r.bounds_.height());
  r.index_.assign(w * h, -1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells[i];
    const auto slot = static_cast<std::size_t>(c.y - r.bounds_.min_y) * w +
                      static_cast<std::size_t>(c.x - r.bounds_.min_x);
    r.index_[slot] = static_cast<std::int32_t>(i);
  }
  r.cells_ = std::move(cells);

  if (!r.contains(door)) {
    throw Error(ErrorCode::DoorOutOfBounds, "door " + to_string(door) + " is not a region cell");
  }
  r.door_ = door;

  std::vector<bool> seen(r.cells_.size(), false);
  std::deque<Cell> queue{door};
  seen[*r.index_of(door)] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Cell v = queue.front();
    queue.pop_front();
    for (Direction d : kDirections) {
      const auto idx = r.index_of(v + offset(d));
      if (idx && !seen[*idx]) {
        seen[*idx] = true;
        ++reached;
        queue.push_back(v + offset(d));
      }
    }
  }
  if (reached != r.cells_.size()) {
    throw Error(ErrorCode::DisconnectedRegion,
                "region is not 4-connected: door reaches " + std::to_string(reached) + " of " +
                    std::to_string(r.cells_.size()) + " cells");
  }
  return r;
}

Region Region::from_ascii(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) rows.push_back(text.substr(start));
      break;
    }
    rows.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::MalformedMap, "map is empty");
  }
  const std::size_t width = rows.front().size();
  std::vector<Cell> cells;
  std::optional<Cell> door;
  const int height = static_cast<int>(rows.size());
  for (int row = 0; row < height; ++row) {
    const auto line = rows[static_cast<std::size_t>(row)];
    if (line.size() != width) {
      throw Error(ErrorCode::MalformedMap,
                  "ragged map: row " + std::to_string(row) + " has " + std::to_string(line.size()) +
                      " columns, expected " + std::to_string(width));
    }
    for (std::size_t col = 0; col < width; ++col) {
      const Cell c{static_cast<int>(col), height - 1 - row};
      switch (line[col]) {
        case '#': break;
        case '.': cells.push_back(c); break;
        case 'S':
          if (door) throw Error(ErrorCode::MultipleDoors, "map has more than one 'S'");
          door = c;
          cells.push_back(c);
          break;
        default:
          throw Error(ErrorCode::MalformedMap, std::string("bad map character '") + line[col] +
                                                   "' at row " + std::to_string(row));
      }
    }
  }
  if (!door) throw Error(ErrorCode::NoDoor, "map has no 'S'");

  int min_x = door->x;
  int min_y = door->y;
  for (Cell c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  const Cell shift{-min_x, -min_y};
  for (Cell& c : cells) c = c + shift;
  return from_cells(std::move(cells), *door + shift);
}

std::string Region::to_ascii() const {
  std::string out;
  out.reserve(static_cast<std::size_t>((bounds_.width() + 1) * bounds_.height()));
  for (int y = bounds_.max_y; y >= bounds_.min_y; --y) {
    for (int x = bounds_.min_x; x <= bounds_.max_x; ++x) {
      const Cell c{x, y};
      out.push_back(c == door_ ? 'S' : contains(c) ? '.' : '#');
    }
    out.push_back('\n');
  }
  return out;
}

std::optional<std::size_t> Region::index_of(Cell c) const {
  if (!bounds_.contains(c)) return std::nullopt;
  const auto slot = static_cast<std::size_t>(c.y - bounds_.min_y) *
                        static_cast<std::size_t>(bounds_.width()) +
                    static_cast<std::size_t>(c.x - bounds_.min_x);
  const std::int32_t idx = index_[slot];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

bool Region::contains(Cell c) const { return index_of(c).has_value(); }

std::vector<Cell> Region::neighbors(Cell v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::CellNotInRegion, to_string(v) + " is not a region cell");
  }
  std::vector<Cell> out;
  out.reserve(4);
  for (Direction d : kDirections) {
    const Cell u = v + offset(d);
    if (contains(u)) out.push_back(u);
  }
  return out;
}

}  // namespace dispersal
