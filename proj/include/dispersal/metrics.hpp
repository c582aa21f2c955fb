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

#include "dispersal/trace.hpp"

namespace dispersal {

struct RobotTravel {
  int id = 0;
  std::int64_t travel = 0;  // steps begun and ended active, pauses included
  std::int64_t moves = 0;   // position changes
  Cell final_pos;
  Lifecycle final_state = Lifecycle::Active;
};

struct RunMetrics {
  std::size_t cells = 0;  // V
  Outcome outcome;
  std::optional<int> makespan;  // set when covered
  std::int64_t total_travel = 0;
  std::int64_t max_travel = 0;
  std::int64_t total_moves = 0;
  std::int64_t max_moves = 0;
  std::int64_t optimum = 0;  // sum of door distances
  bool optimal = false;
  std::vector<RobotTravel> robots;
};

/// Recomputes every metric from the trace alone. Throws
/// Error{TraceRegionMismatch} when the trace was recorded on another region.
RunMetrics compute_metrics(const SimulationTrace& trace, const Region& r);

/// env,door_x,door_y,V,strategy,seed,outcome,makespan,total_travel,...
std::string_view csv_header();
std::string csv_row(std::string_view env, const Region& r, std::string_view strategy,
                    std::uint64_t seed, const RunMetrics& m);
/// Row for a run that aborted; the outcome column carries the error name.
std::string csv_error_row(std::string_view env, const Region& r, std::string_view strategy,
                          std::uint64_t seed, std::string_view error);

struct Spread {
  double mean = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
};

struct ComparisonRun {
  std::string strategy;
  std::uint64_t seed = 0;
  std::optional<RunMetrics> metrics;
  std::string error;  // set when the run aborted
};

struct StrategySummary {
  std::string strategy;
  int runs = 0;
  int failures = 0;
  Spread total_travel;
  Spread max_travel;
  Spread total_moves;
  Spread max_moves;
  Spread makespan;  // covered runs only
};

struct ComparisonTable {
  std::vector<ComparisonRun> runs;  // sorted by strategy order, then seed
  std::vector<StrategySummary> summary;

  std::string to_csv(std::string_view env, const Region& r) const;
  /// Human-readable "total (max)" table.
  std::string format() const;
};

/// Runs every strategy with seeds seed, seed+1, ..., seed+reps-1. Run
/// failures are recorded per row instead of aborting the table.
ComparisonTable compare_runs(const Region& r, const std::vector<std::string>& strategies,
                             std::uint64_t seed, int reps, std::optional<int> max_steps = {});

}  // namespace dispersal
