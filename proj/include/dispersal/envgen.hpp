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

#include "dispersal/grid.hpp"

namespace dispersal {

/// Full w x h rectangle with its lower-left cell at the origin.
/// Throws Error{BadParameters} for w or h < 1, Error{DoorOutOfBounds}.
Region rect(int w, int h, Cell door);

/// Simply connected region of exactly `cells` cells grown from the origin by
/// attaching uniformly chosen boundary cells, rejecting any attachment that
/// would enclose a wall. The door is the seed cell. Deterministic in `seed`.
Region random_simply_connected(int cells, std::uint64_t seed);

/// The comb of 10r unit-width columns on a bottom row of length 20r^2.
/// Columns sit at x = 0, 2r, 4r, ... and rise 30r^2 cells; column 1 and
/// column k rise one cell further and are joined by a top row running between
/// them. The door is the bottom-left cell. Requires r >= 1, 2 <= k <= 10r.
Region g_k(int r, int k);

}  // namespace dispersal
