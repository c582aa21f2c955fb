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

#include "dispersal/topology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "dispersal/error.hpp"

namespace dispersal {

VertexClass classify_in(const CellPredicate& inside, Cell v) {
  std::array<Direction, 4> present{};
  int count = 0;
  for (Direction d : kDirections) {
    if (inside(v + offset(d))) present[static_cast<std::size_t>(count++)] = d;
  }
  if (count <= 1) return {VertexKind::Corner, std::nullopt};
  if (count >= 3) return {VertexKind::Interior, std::nullopt};
  if (present[1] == opposite(present[0])) return {VertexKind::Interior, std::nullopt};
  const Cell w = v + offset(present[0]) + offset(present[1]);
  return {inside(w) ? VertexKind::Corner : VertexKind::Hall, w};
}

VertexClass classify(const Region& r, Cell v) {
  if (!r.contains(v)) {
    throw Error(ErrorCode::CellNotInRegion, to_string(v) + " is not a region cell");
  }
  return classify_in([&r](Cell c) { return r.contains(c); }, v);
}

bool is_simply_connected(const std::vector<Cell>& cells) {
  if (cells.empty()) return true;
  int min_x = cells.front().x, max_x = min_x, min_y = cells.front().y, max_y = min_y;
  for (Cell c : cells) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  // One ring of padding guarantees the exterior is a single connected border.
  const int w = max_x - min_x + 3;
  const int h = max_y - min_y + 3;
  auto slot = [&](int x, int y) { return static_cast<std::size_t>(y) * static_cast<std::size_t>(w) +
                                         static_cast<std::size_t>(x); };
  std::vector<std::uint8_t> grid(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  for (Cell c : cells) grid[slot(c.x - min_x + 1, c.y - min_y + 1)] = 1;

  std::size_t walls = 0;
  for (std::uint8_t g : grid) walls += g == 0 ? 1 : 0;

  // 2 marks an exterior-reached wall.
  std::deque<std::pair<int, int>> queue{{0, 0}};
  grid[slot(0, 0)] = 2;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int nx = x + dx, ny = y + dy;
        if ((dx == 0 && dy == 0) || nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        auto& g = grid[slot(nx, ny)];
        if (g == 0) {
          g = 2;
          ++reached;
          queue.emplace_back(nx, ny);
        }
      }
    }
  }
  return reached == walls;
}

bool is_simply_connected(const Region& r) { return is_simply_connected(r.cells()); }

HallTree hall_tree(const Region& r) {
  if (!is_simply_connected(r)) {
    throw Error(ErrorCode::NotSimplyConnected, "hall tree requires a simply connected region");
  }
  const auto& cells = r.cells();
  const std::size_t n = cells.size();
  std::vector<bool> is_hall(n, false);
  for (std::size_t i = 0; i < n; ++i) is_hall[i] = classify(r, cells[i]).kind == VertexKind::Hall;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(n, kNone);
  HallTree tree;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_hall[i] || comp[i] != kNone) continue;
    const std::size_t id = tree.components.size();
    tree.components.emplace_back();
    std::deque<std::size_t> queue{i};
    comp[i] = id;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      tree.components[id].push_back(cells[v]);
      for (Direction d : kDirections) {
        const auto u = r.index_of(cells[v] + offset(d));
        if (u && !is_hall[*u] && comp[*u] == kNone) {
          comp[*u] = id;
          queue.push_back(*u);
        }
      }
    }
  }

  // Halls may sit next to each other (staircases); each maximal chain of
  // halls joins the components found at its two ends.
  std::vector<bool> chained(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_hall[i] || chained[i]) continue;
    std::vector<Cell> chain;
    std::vector<std::size_t> ends;
    std::deque<std::size_t> queue{i};
    chained[i] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      chain.push_back(cells[v]);
      for (Direction d : kDirections) {
        const auto u = r.index_of(cells[v] + offset(d));
        if (!u) continue;
        if (is_hall[*u]) {
          if (!chained[*u]) {
            chained[*u] = true;
            queue.push_back(*u);
          }
        } else {
          auto& members = tree.components[comp[*u]];
          if (std::find(members.begin(), members.end(), cells[v]) == members.end()) {
            members.push_back(cells[v]);
          }
          if (std::find(ends.begin(), ends.end(), comp[*u]) == ends.end()) ends.push_back(comp[*u]);
        }
      }
    }
    if (ends.size() == 2) {
      std::sort(chain.begin(), chain.end());
      tree.edges.push_back({std::min(ends[0], ends[1]), std::max(ends[0], ends[1]), std::move(chain)});
    }
  }

  const auto door = *r.index_of(r.door());
  if (!is_hall[door]) {
    tree.root = comp[door];
  } else {
    for (std::size_t c = 0; c < tree.components.size(); ++c) {
      const auto& m = tree.components[c];
      if (std::find(m.begin(), m.end(), r.door()) != m.end()) {
        tree.root = c;
        break;
      }
    }
  }
  return tree;
}

std::vector<Cell> articulation_points(const Region& r) {
  const auto& cells = r.cells();
  const std::size_t n = cells.size();
  std::vector<Cell> out;
  if (n < 3) return out;
  std::vector<std::uint32_t> mark(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t removed = 0; removed < n; ++removed) {
    const auto stamp = static_cast<std::uint32_t>(removed + 1);
    const std::size_t start = removed == 0 ? 1 : 0;
    mark[removed] = stamp;
    mark[start] = stamp;
    queue.assign(1, start);
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (Direction d : kDirections) {
        const auto u = r.index_of(cells[v] + offset(d));
        if (u && mark[*u] != stamp) {
          mark[*u] = stamp;
          ++reached;
          queue.push_back(*u);
        }
      }
    }
    if (reached != n - 1) out.push_back(cells[removed]);
  }
  return out;
}

std::vector<int> bfs_distances_in(const Region& r, const CellPredicate& inside, Cell src) {
  const auto s = r.index_of(src);
  if (!s || !inside(src)) {
    throw Error(ErrorCode::CellNotInRegion, to_string(src) + " is not a region cell");
  }
  const auto& cells = r.cells();
  std::vector<int> dist(cells.size(), -1);
  dist[*s] = 0;
  std::deque<std::size_t> queue{*s};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (Direction d : kDirections) {
      const Cell c = cells[v] + offset(d);
      const auto u = r.index_of(c);
      if (u && dist[*u] < 0 && inside(c)) {
        dist[*u] = dist[v] + 1;
        queue.push_back(*u);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Region& r, Cell src) {
  const auto s = r.index_of(src);
  if (!s) throw Error(ErrorCode::CellNotInRegion, to_string(src) + " is not a region cell");
  const auto& cells = r.cells();
  std::vector<int> dist(cells.size(), -1);
  dist[*s] = 0;
  std::vector<std::size_t> queue{*s};
  queue.reserve(cells.size());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (Direction d : kDirections) {
      const auto u = r.index_of(cells[v] + offset(d));
      if (u && dist[*u] < 0) {
        dist[*u] = dist[v] + 1;
        queue.push_back(*u);
      }
    }
  }
  return dist;
}

std::int64_t sum_distances(const Region& r, Cell src) {
  std::int64_t total = 0;
  for (int d : bfs_distances(r, src)) total += d;
  return total;
}

std::vector<Cell> geometric_median(const Region& r) {
  std::vector<Cell> best;
  std::int64_t best_sum = std::numeric_limits<std::int64_t>::max();
  for (Cell c : r.cells()) {
    const std::int64_t s = sum_distances(r, c);
    if (s < best_sum) {
      best_sum = s;
      best.assign(1, c);
    } else if (s == best_sum) {
      best.push_back(c);
    }
  }
  return best;
}

DistanceTable::DistanceTable(const Region& r) : region_(r), n_(r.size()), dist_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    const auto row = bfs_distances(region_, region_.cells()[i]);
    for (std::size_t j = 0; j < n_; ++j) dist_[i * n_ + j] = static_cast<std::uint16_t>(row[j]);
  }
}

int DistanceTable::operator()(Cell a, Cell b) const {
  const auto i = region_.index_of(a);
  const auto j = region_.index_of(b);
  if (!i || !j) throw Error(ErrorCode::CellNotInRegion, "distance query outside the region");
  return dist_[*i * n_ + *j];
}

}  // namespace dispersal
