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

#include "dispersal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dispersal/engine.hpp"
#include "dispersal/error.hpp"
#include "dispersal/strategies.hpp"
#include "dispersal/topology.hpp"

namespace dispersal {

RunMetrics compute_metrics(const SimulationTrace& trace, const Region& r) {
  if (!(trace.region == r)) {
    throw Error(ErrorCode::TraceRegionMismatch, "trace was recorded on a different region");
  }
  RunMetrics m;
  m.cells = r.size();
  m.outcome = trace.outcome;
  if (trace.outcome.kind == Outcome::Kind::Covered) m.makespan = trace.outcome.t;
  m.optimum = sum_distances(r, r.door());

  const StepRecord* before = nullptr;
  for (const StepRecord& step : trace.steps) {
    for (const RobotRecord& rec : step.robots) {
      const auto slot = static_cast<std::size_t>(rec.id - 1);
      if (slot >= m.robots.size()) {
        m.robots.resize(slot + 1);
        m.robots[slot].id = rec.id;
      }
      RobotTravel& robot = m.robots[slot];
      if (before && slot < before->robots.size()) {
        const RobotRecord& then = before->robots[slot];
        if (then.state == Lifecycle::Active && rec.state == Lifecycle::Active) ++robot.travel;
        if (then.pos != rec.pos) ++robot.moves;
      }
      robot.final_pos = rec.pos;
      robot.final_state = rec.state;
    }
    before = &step;
  }
  for (const RobotTravel& robot : m.robots) {
    m.total_travel += robot.travel;
    m.max_travel = std::max(m.max_travel, robot.travel);
    m.total_moves += robot.moves;
    m.max_moves = std::max(m.max_moves, robot.moves);
  }
  m.optimal = m.total_travel == m.optimum;
  return m;
}

std::string_view csv_header() {
  return "env,door_x,door_y,V,strategy,seed,outcome,makespan,total_travel,max_travel,"
         "total_moves,max_moves,optimum,optimal";
}

namespace {

std::string row_prefix(std::string_view env, const Region& r, std::string_view strategy,
                       std::uint64_t seed) {
  std::ostringstream out;
  out << env << ',' << r.door().x << ',' << r.door().y << ',' << r.size() << ',' << strategy << ','
      << seed << ',';
  return out.str();
}

std::string format_number(double v) {
  char buf[64];
  if (std::fabs(v - std::round(v)) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", v);
  }
  return buf;
}

void accumulate(Spread& s, std::int64_t v, int n) {
  if (n == 0) {
    s.min = s.max = v;
  } else {
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean += (static_cast<double>(v) - s.mean) / (n + 1);
}

}  // namespace

std::string csv_row(std::string_view env, const Region& r, std::string_view strategy,
                    std::uint64_t seed, const RunMetrics& m) {
  std::ostringstream out;
  out << row_prefix(env, r, strategy, seed) << to_string(m.outcome.kind) << ',';
  if (m.makespan) out << *m.makespan;
  out << ',' << m.total_travel << ',' << m.max_travel << ',' << m.total_moves << ','
      << m.max_moves << ',' << m.optimum << ',' << (m.optimal ? "true" : "false");
  return out.str();
}

std::string csv_error_row(std::string_view env, const Region& r, std::string_view strategy,
                          std::uint64_t seed, std::string_view error) {
  return row_prefix(env, r, strategy, seed) + "error:" + std::string(error) + ",,,,,," +
         std::to_string(sum_distances(r, r.door())) + ",false";
}

ComparisonTable compare_runs(const Region& r, const std::vector<std::string>& strategies,
                             std::uint64_t seed, int reps, std::optional<int> max_steps) {
  if (reps < 1) throw Error(ErrorCode::BadParameters, "reps must be at least 1");
  ComparisonTable table;
  for (const std::string& name : strategies) {
    const auto strategy = make_strategy(name);
    StrategySummary summary;
    summary.strategy = name;
    int covered = 0;
    for (int rep = 0; rep < reps; ++rep) {
      ComparisonRun row{name, seed + static_cast<std::uint64_t>(rep), std::nullopt, {}};
      try {
        row.metrics = run(r, *strategy, row.seed, RunLimits{max_steps}).metrics;
      } catch (const Error& e) {
        row.error = std::string(to_string(e.code()));
      }
      if (row.metrics) {
        const RunMetrics& m = *row.metrics;
        const int n = summary.runs;
        accumulate(summary.total_travel, m.total_travel, n);
        accumulate(summary.max_travel, m.max_travel, n);
        accumulate(summary.total_moves, m.total_moves, n);
        accumulate(summary.max_moves, m.max_moves, n);
        if (m.makespan) accumulate(summary.makespan, *m.makespan, covered++);
        ++summary.runs;
      } else {
        ++summary.failures;
      }
      table.runs.push_back(std::move(row));
    }
    table.summary.push_back(std::move(summary));
  }
  return table;
}

std::string ComparisonTable::to_csv(std::string_view env, const Region& r) const {
  std::string out(csv_header());
  out += '\n';
  for (const ComparisonRun& run : runs) {
    out += run.metrics ? csv_row(env, r, run.strategy, run.seed, *run.metrics)
                       : csv_error_row(env, r, run.strategy, run.seed, run.error);
    out += '\n';
  }
  return out;
}

std::string ComparisonTable::format() const {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %5s %22s %22s %10s\n", "strategy", "runs",
                "travel total (max)", "moves total (max)", "makespan");
  out << line;
  for (const StrategySummary& s : summary) {
    if (s.runs == 0) {
      std::snprintf(line, sizeof line, "%-12s %5d %22s %22s %10s\n", s.strategy.c_str(), 0,
                    "failed", "failed", "-");
      out << line;
      continue;
    }
    const std::string travel =
        format_number(s.total_travel.mean) + " (" + format_number(s.max_travel.mean) + ")";
    const std::string moves =
        format_number(s.total_moves.mean) + " (" + format_number(s.max_moves.mean) + ")";
    const std::string makespan =
        s.makespan.min == 0 && s.makespan.max == 0 ? "-" : format_number(s.makespan.mean);
    std::snprintf(line, sizeof line, "%-12s %5d %22s %22s %10s\n", s.strategy.c_str(), s.runs,
                  travel.c_str(), moves.c_str(), makespan.c_str());
    out << line;
    if (s.total_moves.min != s.total_moves.max) {
      std::snprintf(line, sizeof line, "%-12s %5s %22s %22s\n", "", "range",
                    (std::to_string(s.total_travel.min) + ".." + std::to_string(s.total_travel.max)).c_str(),
                    (std::to_string(s.total_moves.min) + ".." + std::to_string(s.total_moves.max)).c_str());
      out << line;
    }
  }
  return out.str();
}

}  // namespace dispersal
