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

#include "dispersal/dispersal.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "dispersal/engine.hpp"
#include "dispersal/envgen.hpp"
#include "dispersal/error.hpp"
#include "dispersal/invariants.hpp"
#include "dispersal/metrics.hpp"
#include "dispersal/render.hpp"
#include "dispersal/strategies.hpp"
#include "dispersal/topology.hpp"

using namespace dispersal;

struct dsp_region {
  Region region;
};

struct dsp_trace {
  SimulationTrace trace;
  RunMetrics metrics;
};

namespace {

thread_local std::string last_error;

dsp_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedMap: return DSP_E_MALFORMED_MAP;
    case ErrorCode::NoDoor: return DSP_E_NO_DOOR;
    case ErrorCode::MultipleDoors: return DSP_E_MULTIPLE_DOORS;
    case ErrorCode::DisconnectedRegion: return DSP_E_DISCONNECTED_REGION;
    case ErrorCode::CellNotInRegion: return DSP_E_CELL_NOT_IN_REGION;
    case ErrorCode::NotSimplyConnected: return DSP_E_NOT_SIMPLY_CONNECTED;
    case ErrorCode::DoorOutOfBounds: return DSP_E_DOOR_OUT_OF_BOUNDS;
    case ErrorCode::BadParameters: return DSP_E_BAD_PARAMETERS;
    case ErrorCode::Collision: return DSP_E_COLLISION;
    case ErrorCode::NoLegalAction: return DSP_E_NO_LEGAL_ACTION;
    case ErrorCode::UnknownStrategy: return DSP_E_UNKNOWN_STRATEGY;
    case ErrorCode::TraceRegionMismatch: return DSP_E_TRACE_REGION_MISMATCH;
    case ErrorCode::StepOutOfRange: return DSP_E_STEP_OUT_OF_RANGE;
    case ErrorCode::BadTrace: return DSP_E_BAD_TRACE;
    case ErrorCode::Io: return DSP_E_IO;
  }
  return DSP_E_INTERNAL;
}

template <class F>
dsp_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return DSP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return DSP_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return DSP_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::BadParameters, std::string("null argument: ") + what);
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dsp_status make_region(dsp_region** out, auto&& build) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new dsp_region{build()};
  });
}

}  // namespace

extern "C" {

const char* dsp_last_error(void) { return last_error.c_str(); }

const char* dsp_status_name(dsp_status status) {
  switch (status) {
    case DSP_OK: return "Ok";
    case DSP_E_INTERNAL: return "InternalError";
    default: break;
  }
  if (status < DSP_OK || status > DSP_E_INTERNAL) return "UnknownStatus";
  return to_string(static_cast<ErrorCode>(status - 1)).data();
}

void dsp_string_free(char* s) { std::free(s); }

dsp_status dsp_region_from_ascii(const char* text, dsp_region** out) {
  return make_region(out, [&] {
    require(text, "text");
    return Region::from_ascii(text);
  });
}

dsp_status dsp_region_rect(int w, int h, int door_x, int door_y, dsp_region** out) {
  return make_region(out, [&] { return rect(w, h, {door_x, door_y}); });
}

dsp_status dsp_region_random(int cells, uint64_t seed, dsp_region** out) {
  return make_region(out, [&] { return random_simply_connected(cells, seed); });
}

dsp_status dsp_region_gk(int r, int k, dsp_region** out) {
  return make_region(out, [&] { return g_k(r, k); });
}

void dsp_region_free(dsp_region* region) { delete region; }

dsp_status dsp_region_to_ascii(const dsp_region* region, char** out) {
  return guarded([&] {
    require(region && out, "region/out");
    *out = copy(region->region.to_ascii());
  });
}

size_t dsp_region_size(const dsp_region* region) { return region ? region->region.size() : 0; }

dsp_status dsp_region_oracle(const dsp_region* region, dsp_oracle_report* out) {
  return guarded([&] {
    require(region && out, "region/out");
    const Region& r = region->region;
    dsp_oracle_report report{};
    report.cells = r.size();
    report.simply_connected = is_simply_connected(r) ? 1 : 0;
    for (Cell c : r.cells()) {
      const VertexKind kind = classify(r, c).kind;
      report.corners += kind == VertexKind::Corner;
      report.halls += kind == VertexKind::Hall;
    }
    report.hall_tree_components =
        report.simply_connected ? static_cast<int64_t>(hall_tree(r).components.size()) : -1;
    report.sum_distances = sum_distances(r, r.door());
    for (int d : bfs_distances(r, r.door())) report.max_distance = std::max(report.max_distance, d);
    report.median_count = geometric_median(r).size();
    *out = report;
  });
}

dsp_status dsp_region_median(const dsp_region* region, int* xy, size_t capacity, size_t* count) {
  return guarded([&] {
    require(region && count, "region/count");
    require(xy || capacity == 0, "xy");
    const auto median = geometric_median(region->region);
    *count = median.size();
    for (size_t i = 0; i < median.size() && i < capacity; ++i) {
      xy[2 * i] = median[i].x;
      xy[2 * i + 1] = median[i].y;
    }
  });
}

size_t dsp_strategy_count(void) { return strategy_names().size(); }

const char* dsp_strategy_name(size_t index) {
  const auto& names = strategy_names();
  return index < names.size() ? names[index].data() : nullptr;
}

dsp_status dsp_simulate(const dsp_region* region, const dsp_run_options* options,
                        dsp_trace** out) {
  return guarded([&] {
    require(region && options && out && options->strategy, "region/options/out/strategy");
    *out = nullptr;
    const auto strategy = make_strategy(options->strategy);
    RunLimits limits;
    if (options->max_steps != 0) limits.max_steps = options->max_steps;
    RunResult result = run(region->region, *strategy, options->seed, limits);
    *out = new dsp_trace{std::move(result.trace), std::move(result.metrics)};
  });
}

void dsp_trace_free(dsp_trace* trace) { delete trace; }

dsp_status dsp_trace_metrics(const dsp_trace* trace, dsp_metrics* out) {
  return guarded([&] {
    require(trace && out, "trace/out");
    const RunMetrics& m = trace->metrics;
    dsp_metrics c{};
    c.cells = m.cells;
    c.outcome = static_cast<dsp_outcome>(m.outcome.kind);
    c.outcome_step = m.outcome.t;
    c.makespan = m.makespan.value_or(-1);
    c.total_travel = m.total_travel;
    c.max_travel = m.max_travel;
    c.total_moves = m.total_moves;
    c.max_moves = m.max_moves;
    c.optimum = m.optimum;
    c.optimal = m.optimal ? 1 : 0;
    *out = c;
  });
}

int dsp_trace_last_step(const dsp_trace* trace) { return trace ? trace->trace.last_step() : 0; }

dsp_status dsp_trace_to_json(const dsp_trace* trace, char** out) {
  return guarded([&] {
    require(trace && out, "trace/out");
    *out = copy(to_json(trace->trace));
  });
}

dsp_status dsp_trace_from_json(const char* text, dsp_trace** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = nullptr;
    SimulationTrace trace = trace_from_json(text);
    RunMetrics metrics = compute_metrics(trace, trace.region);
    *out = new dsp_trace{std::move(trace), std::move(metrics)};
  });
}

const char* dsp_csv_header(void) { return csv_header().data(); }

dsp_status dsp_trace_csv_row(const dsp_trace* trace, const char* env, char** out) {
  return guarded([&] {
    require(trace && env && out, "trace/env/out");
    *out = copy(csv_row(env, trace->trace.region, trace->trace.strategy, trace->trace.seed,
                        trace->metrics));
  });
}

dsp_status dsp_trace_check(const dsp_trace* trace, size_t* count, char** report) {
  return guarded([&] {
    require(trace && count, "trace/count");
    bool depth_first = false;
    try {
      depth_first = make_strategy(trace->trace.strategy)->checks_fcdfs_invariants();
    } catch (const Error&) {
      // Traces from unknown strategies still get the collision check.
    }
    const auto violations = check_trace(trace->trace, depth_first);
    *count = violations.size();
    if (report) {
      std::string text;
      for (const Violation& v : violations) {
        text += "t=" + std::to_string(v.t) + " " + std::string(to_string(v.kind)) + ": " +
                v.detail + "\n";
      }
      *report = copy(text);
    }
  });
}

dsp_status dsp_trace_ascii_frame(const dsp_trace* trace, int t, char** out) {
  return guarded([&] {
    require(trace && out, "trace/out");
    *out = copy(ascii_frame(trace->trace, t));
  });
}

dsp_status dsp_trace_svg_frame(const dsp_trace* trace, int t, char** out) {
  return guarded([&] {
    require(trace && out, "trace/out");
    *out = copy(svg_frame(trace->trace, t));
  });
}

dsp_status dsp_trace_svg_frames(const dsp_trace* trace, int every, const char* out_dir,
                                size_t* count) {
  return guarded([&] {
    require(trace && out_dir && count, "trace/out_dir/count");
    *count = svg_frames(trace->trace, every, out_dir).size();
  });
}

dsp_status dsp_compare(const dsp_region* region, const char* const* strategies,
                       size_t strategy_count, uint64_t seed, int reps, int max_steps,
                       const char* env, char** csv, char** table) {
  return guarded([&] {
    require(region && (strategies || strategy_count == 0) && env, "region/strategies/env");
    std::vector<std::string> names;
    for (size_t i = 0; i < strategy_count; ++i) {
      require(strategies[i], "strategy name");
      names.emplace_back(strategies[i]);
    }
    std::optional<int> limit;
    if (max_steps != 0) limit = max_steps;
    const ComparisonTable result = compare_runs(region->region, names, seed, reps, limit);
    if (csv) *csv = copy(result.to_csv(env, region->region));
    if (table) *table = copy(result.format());
  });
}

}  // extern "C"
