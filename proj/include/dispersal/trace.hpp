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
#include <string>
#include <string_view>
#include <vector>

#include "dispersal/grid.hpp"
#include "dispersal/model.hpp"

namespace dispersal {

enum class Lifecycle : std::uint8_t { Active, Settled };

/// One robot at the end of a step. `act` is what it did during the step;
/// robots that did not act (settled earlier, or just spawned) record Stay.
struct RobotRecord {
  int id = 0;
  Cell pos;
  Lifecycle state = Lifecycle::Active;
  Action act;
  std::optional<Direction> heading;  // active robots only

  friend bool operator==(const RobotRecord&, const RobotRecord&) = default;
};

struct StepRecord {
  int t = 0;
  std::optional<int> spawned;
  std::vector<RobotRecord> robots;  // ordered by id

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct Outcome {
  enum class Kind : std::uint8_t { Covered, Deadlock, StepLimit };
  Kind kind = Kind::StepLimit;
  int t = 0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

std::string_view to_string(Outcome::Kind kind);  // covered, deadlock, limit

struct SimulationTrace {
  Region region;
  std::string strategy;
  std::uint64_t seed = 0;
  std::vector<StepRecord> steps;
  Outcome outcome;

  int last_step() const { return steps.empty() ? 0 : steps.back().t; }
};

/// JSON document with a fixed field order, suitable for golden files.
std::string to_json(const SimulationTrace& trace);

/// Throws Error{BadTrace} on malformed input.
SimulationTrace trace_from_json(std::string_view text);

}  // namespace dispersal
