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
#include <functional>
#include <optional>
#include <vector>

#include "dispersal/grid.hpp"

namespace dispersal {

enum class VertexKind : std::uint8_t { Corner, Hall, Interior };

/// Local shape of a cell. `diagonal` is the cell adjacent to both
/// neighbours of a two-neighbour corner or hall; dead-end corners have none.
struct VertexClass {
  VertexKind kind = VertexKind::Interior;
  std::optional<Cell> diagonal;

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

/// Membership test used to classify against a sub-region such as R(t).
using CellPredicate = std::function<bool(Cell)>;

VertexClass classify(const Region& r, Cell v);

/// Classifies `v` inside the cell set described by `inside`. The caller
/// guarantees inside(v).
VertexClass classify_in(const CellPredicate& inside, Cell v);

/// True iff every wall component (under 8-connectivity) reaches the
/// unbounded exterior.
bool is_simply_connected(const Region& r);

/// Same test for an arbitrary finite cell set (e.g. a region minus a cell).
bool is_simply_connected(const std::vector<Cell>& cells);

struct HallTreeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Cell> halls;  // the hall chain joining the two components
};

struct HallTree {
  std::vector<std::vector<Cell>> components;  // each includes adjacent halls
  std::vector<HallTreeEdge> edges;
  std::size_t root = 0;
};

/// Tree of hall-separated components. Throws Error{NotSimplyConnected}.
HallTree hall_tree(const Region& r);

/// Cells whose removal disconnects the region, by brute-force flood fill.
std::vector<Cell> articulation_points(const Region& r);

/// Shortest-path distances from `src`, indexed like r.cells().
std::vector<int> bfs_distances(const Region& r, Cell src);

/// Distances inside the cells of `r` for which `inside` holds.
std::vector<int> bfs_distances_in(const Region& r, const CellPredicate& inside, Cell src);

std::int64_t sum_distances(const Region& r, Cell src);

/// Every cell minimising sum_distances, in r.cells() order.
std::vector<Cell> geometric_median(const Region& r);

/// Dense all-pairs distance table for oracle checks on small regions.
class DistanceTable {
 public:
  explicit DistanceTable(const Region& r);

  int operator()(Cell a, Cell b) const;

 private:
  Region region_;
  std::size_t n_;
  std::vector<std::uint16_t> dist_;
};

}  // namespace dispersal
