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

/* C interface to the dispersal simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a dsp_status; on
 * failure dsp_last_error() describes the problem (per thread, valid until the
 * next call). Strings returned through char** are heap copies released with
 * dsp_string_free(). */
#ifndef DISPERSAL_DISPERSAL_H
#define DISPERSAL_DISPERSAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DISPERSAL_BUILDING_LIBRARY)
#define DSP_API __declspec(dllexport)
#else
#define DSP_API __declspec(dllimport)
#endif
#else
#define DSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsp_status {
  DSP_OK = 0,
  DSP_E_MALFORMED_MAP,
  DSP_E_NO_DOOR,
  DSP_E_MULTIPLE_DOORS,
  DSP_E_DISCONNECTED_REGION,
  DSP_E_CELL_NOT_IN_REGION,
  DSP_E_NOT_SIMPLY_CONNECTED,
  DSP_E_DOOR_OUT_OF_BOUNDS,
  DSP_E_BAD_PARAMETERS,
  DSP_E_COLLISION,
  DSP_E_NO_LEGAL_ACTION,
  DSP_E_UNKNOWN_STRATEGY,
  DSP_E_TRACE_REGION_MISMATCH,
  DSP_E_STEP_OUT_OF_RANGE,
  DSP_E_BAD_TRACE,
  DSP_E_IO,
  DSP_E_INTERNAL
} dsp_status;

typedef enum dsp_outcome { DSP_COVERED = 0, DSP_DEADLOCK = 1, DSP_STEP_LIMIT = 2 } dsp_outcome;

typedef struct dsp_region dsp_region;
typedef struct dsp_trace dsp_trace;

DSP_API const char* dsp_last_error(void);
DSP_API const char* dsp_status_name(dsp_status status);
DSP_API void dsp_string_free(char* s);

/* Regions */
DSP_API dsp_status dsp_region_from_ascii(const char* text, dsp_region** out);
DSP_API dsp_status dsp_region_rect(int w, int h, int door_x, int door_y, dsp_region** out);
DSP_API dsp_status dsp_region_random(int cells, uint64_t seed, dsp_region** out);
DSP_API dsp_status dsp_region_gk(int r, int k, dsp_region** out);
DSP_API void dsp_region_free(dsp_region* region);
DSP_API dsp_status dsp_region_to_ascii(const dsp_region* region, char** out);
DSP_API size_t dsp_region_size(const dsp_region* region);

typedef struct dsp_oracle_report {
  size_t cells;
  int simply_connected;
  size_t corners;
  size_t halls;
  int64_t hall_tree_components; /* -1 when not simply connected */
  int64_t sum_distances;        /* from the door */
  int max_distance;             /* from the door */
  size_t median_count;
} dsp_oracle_report;

DSP_API dsp_status dsp_region_oracle(const dsp_region* region, dsp_oracle_report* out);
/* Geometric-median cells as x0,y0,x1,y1,...; writes at most `capacity`
 * cells and stores the total in *count. */
DSP_API dsp_status dsp_region_median(const dsp_region* region, int* xy, size_t capacity,
                                     size_t* count);

/* Strategies */
DSP_API size_t dsp_strategy_count(void);
DSP_API const char* dsp_strategy_name(size_t index);

/* Simulation */
typedef struct dsp_run_options {
  const char* strategy;
  uint64_t seed;
  int max_steps; /* 0 selects the default of 4V */
} dsp_run_options;

DSP_API dsp_status dsp_simulate(const dsp_region* region, const dsp_run_options* options,
                                dsp_trace** out);
DSP_API void dsp_trace_free(dsp_trace* trace);

typedef struct dsp_metrics {
  size_t cells;
  dsp_outcome outcome;
  int outcome_step;
  int makespan; /* -1 unless covered */
  int64_t total_travel;
  int64_t max_travel;
  int64_t total_moves;
  int64_t max_moves;
  int64_t optimum;
  int optimal;
} dsp_metrics;

DSP_API dsp_status dsp_trace_metrics(const dsp_trace* trace, dsp_metrics* out);
DSP_API int dsp_trace_last_step(const dsp_trace* trace);
DSP_API dsp_status dsp_trace_to_json(const dsp_trace* trace, char** out);
DSP_API dsp_status dsp_trace_from_json(const char* text, dsp_trace** out);
DSP_API const char* dsp_csv_header(void);
DSP_API dsp_status dsp_trace_csv_row(const dsp_trace* trace, const char* env, char** out);

/* Replays the trace against the invariants that apply to its strategy.
 * Stores the number of violations in *count and, if report is not null, one
 * line per violation. */
DSP_API dsp_status dsp_trace_check(const dsp_trace* trace, size_t* count, char** report);

/* Rendering */
DSP_API dsp_status dsp_trace_ascii_frame(const dsp_trace* trace, int t, char** out);
DSP_API dsp_status dsp_trace_svg_frame(const dsp_trace* trace, int t, char** out);
DSP_API dsp_status dsp_trace_svg_frames(const dsp_trace* trace, int every, const char* out_dir,
                                        size_t* count);

/* Runs every named strategy with seeds seed .. seed+reps-1. `csv` receives
 * one row per run, `table` the per-strategy summary. */
DSP_API dsp_status dsp_compare(const dsp_region* region, const char* const* strategies,
                               size_t strategy_count, uint64_t seed, int reps, int max_steps,
                               const char* env, char** csv, char** table);

#ifdef __cplusplus
}
#endif

#endif /* DISPERSAL_DISPERSAL_H */
