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

#include "dispersal/envgen.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "dispersal/error.hpp"
#include "dispersal/topology.hpp"

namespace dispersal {

Region rect(int w, int h, Cell door) {
  if (w < 1 || h < 1) {
    throw Error(ErrorCode::BadParameters,
                "rectangle needs positive size, got " + std::to_string(w) + "x" + std::to_string(h));
  }
  if (door.x < 0 || door.y < 0 || door.x >= w || door.y >= h) {
    throw Error(ErrorCode::DoorOutOfBounds, "door " + to_string(door) + " outside the rectangle");
  }
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) cells.push_back({x, y});
  }
  return Region::from_cells(std::move(cells), door);
}

namespace {

std::uint64_t key(Cell c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
         static_cast<std::uint32_t>(c.y);
}

// The eight surrounding cells in cyclic order.
constexpr std::array<Cell, 8> kRing = {
    {{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};

// Number of 8-connected wall groups around `c`. Filling `c` cannot enclose a
// wall when the walls around it form a single group.
int wall_groups_around(const std::unordered_set<std::uint64_t>& region, Cell c) {
  std::array<bool, 8> wall{};
  for (std::size_t i = 0; i < kRing.size(); ++i) wall[i] = !region.contains(key(c + kRing[i]));
  std::array<int, 8> group{};
  std::iota(group.begin(), group.end(), 0);
  auto find = [&group](int i) {
    while (group[static_cast<std::size_t>(i)] != i) i = group[static_cast<std::size_t>(i)];
    return i;
  };
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      if (!wall[i] || !wall[j]) continue;
      const Cell a = kRing[i], b = kRing[j];
      if (std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1) {
        group[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
      }
    }
  }
  int groups = 0;
  for (std::size_t i = 0; i < 8; ++i) groups += wall[i] && find(static_cast<int>(i)) == static_cast<int>(i);
  return groups;
}

}  // namespace

Region random_simply_connected(int cells, std::uint64_t seed) {
  if (cells < 1) throw Error(ErrorCode::BadParameters, "region needs at least one cell");
  std::mt19937_64 rng(seed);
  std::vector<Cell> placed{{0, 0}};
  std::unordered_set<std::uint64_t> in_region{key({0, 0})};
  std::vector<Cell> frontier;
  std::unordered_map<std::uint64_t, std::size_t> frontier_slot;

  auto add_frontier = [&](Cell c) {
    if (in_region.contains(key(c)) || frontier_slot.contains(key(c))) return;
    frontier_slot.emplace(key(c), frontier.size());
    frontier.push_back(c);
  };
  auto remove_frontier = [&](Cell c) {
    const auto it = frontier_slot.find(key(c));
    const std::size_t slot = it->second;
    frontier_slot.erase(it);
    if (slot + 1 != frontier.size()) {
      frontier[slot] = frontier.back();
      frontier_slot[key(frontier[slot])] = slot;
    }
    frontier.pop_back();
  };
  for (Direction d : kDirections) add_frontier(offset(d));

  while (static_cast<int>(placed.size()) < cells) {
    const Cell c = frontier[static_cast<std::size_t>(rng() % frontier.size())];
    if (wall_groups_around(in_region, c) > 1) {
      placed.push_back(c);
      const bool ok = is_simply_connected(placed);
      placed.pop_back();
      if (!ok) continue;
    }
    placed.push_back(c);
    in_region.insert(key(c));
    remove_frontier(c);
    for (Direction d : kDirections) add_frontier(c + offset(d));
  }

  int min_x = 0, min_y = 0;
  for (Cell c : placed) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  const Cell shift{-min_x, -min_y};
  for (Cell& c : placed) c = c + shift;
  return Region::from_cells(std::move(placed), shift);
}

Region g_k(int r, int k) {
  if (r < 1 || k < 2 || k > 10 * r) {
    throw Error(ErrorCode::BadParameters, "g_k needs r >= 1 and 2 <= k <= 10r, got r=" +
                                              std::to_string(r) + " k=" + std::to_string(k));
  }
  const int bottom_length = 20 * r * r;
  const int column_height = 30 * r * r;
  const int spacing = 2 * r;
  const int top_y = column_height + 1;
  const int kth_x = (k - 1) * spacing;

  std::vector<Cell> cells;
  for (int x = 0; x < bottom_length; ++x) cells.push_back({x, 0});
  for (int j = 0; j < 10 * r; ++j) {
    const int x = j * spacing;
    const int height = (j == 0 || j == k - 1) ? column_height + 1 : column_height;
    for (int y = 1; y <= height; ++y) cells.push_back({x, y});
  }
  for (int x = 1; x < kth_x; ++x) cells.push_back({x, top_y});
  return Region::from_cells(std::move(cells), {0, 0});
}

}  // namespace dispersal
