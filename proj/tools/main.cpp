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

// Command-line front end. Everything goes through the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dispersal/dispersal.h"

namespace {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kBadArguments = 2;
constexpr int kDeadlock = 3;
constexpr int kStepLimit = 4;
constexpr int kInvariant = 5;

struct RegionDeleter {
  void operator()(dsp_region* r) const { dsp_region_free(r); }
};
struct TraceDeleter {
  void operator()(dsp_trace* t) const { dsp_trace_free(t); }
};
struct StringDeleter {
  void operator()(char* s) const { dsp_string_free(s); }
};
using RegionPtr = std::unique_ptr<dsp_region, RegionDeleter>;
using TracePtr = std::unique_ptr<dsp_trace, TraceDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return code;
}

int fail(int code, dsp_status status) {
  return fail(code, std::string(dsp_status_name(status)) + ": " + dsp_last_error());
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string env_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

bool known_strategy(const std::string& name) {
  for (size_t i = 0; i < dsp_strategy_count(); ++i) {
    if (name == dsp_strategy_name(i)) return true;
  }
  return false;
}

std::string strategy_list() {
  std::string out;
  for (size_t i = 0; i < dsp_strategy_count(); ++i) {
    if (i) out += ", ";
    out += dsp_strategy_name(i);
  }
  return out;
}

// Loads a map file; on failure prints the reason and returns null.
RegionPtr load_region(const std::string& path) {
  const auto text = read_file(path);
  if (!text) {
    fail(kFailure, "cannot read " + path);
    return nullptr;
  }
  dsp_region* region = nullptr;
  if (const dsp_status s = dsp_region_from_ascii(text->c_str(), &region); s != DSP_OK) {
    fail(kFailure, path + ": " + dsp_status_name(s) + ": " + dsp_last_error());
    return nullptr;
  }
  return RegionPtr(region);
}

struct GenArgs {
  std::string shape;
  int w = 0, h = 0;
  std::string door;
  int cells = 0;
  std::uint64_t seed = 0;
  int r = 0, k = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, const CLI::App& sub) {
  dsp_region* raw = nullptr;
  dsp_status s = DSP_OK;
  if (a.shape == "rect") {
    if (!sub.count("--w") || !sub.count("--h") || !sub.count("--door")) {
      return fail(kBadArguments, "rect needs --w, --h and --door");
    }
    int dx = 0, dy = 0;
    char tail = 0;
    if (std::sscanf(a.door.c_str(), "%d,%d%c", &dx, &dy, &tail) != 2) {
      return fail(kBadArguments, "--door expects X,Y");
    }
    if (a.w < 1 || a.h < 1) return fail(kBadArguments, "--w and --h must be positive");
    s = dsp_region_rect(a.w, a.h, dx, dy, &raw);
  } else if (a.shape == "random") {
    if (!sub.count("--cells")) return fail(kBadArguments, "random needs --cells");
    if (a.cells < 1) return fail(kBadArguments, "--cells must be positive");
    s = dsp_region_random(a.cells, a.seed, &raw);
  } else {
    if (!sub.count("--r") || !sub.count("--k")) return fail(kBadArguments, "gk needs --r and --k");
    if (a.r < 1 || a.k < 2 || a.k > 10 * a.r) {
      return fail(kBadArguments, "gk needs r >= 1 and 2 <= k <= 10r");
    }
    s = dsp_region_gk(a.r, a.k, &raw);
  }
  if (s == DSP_E_BAD_PARAMETERS || s == DSP_E_DOOR_OUT_OF_BOUNDS) return fail(kBadArguments, s);
  if (s != DSP_OK) return fail(kFailure, s);
  RegionPtr region(raw);

  char* ascii = nullptr;
  if (const dsp_status e = dsp_region_to_ascii(region.get(), &ascii); e != DSP_OK) {
    return fail(kFailure, e);
  }
  StringPtr map(ascii);
  dsp_oracle_report report{};
  if (const dsp_status e = dsp_region_oracle(region.get(), &report); e != DSP_OK) {
    return fail(kFailure, e);
  }
  const std::string summary = "V=" + std::to_string(report.cells) +
                              " simply_connected=" + (report.simply_connected ? "true" : "false");
  if (a.out.empty()) {
    std::cout << map.get();
    std::cerr << summary << "\n";
  } else {
    if (!write_file(a.out, map.get())) return fail(kFailure, "cannot write " + a.out);
    std::cout << summary << "\n";
  }
  return kOk;
}

struct RunArgs {
  std::string env;
  std::string strategy;
  std::uint64_t seed = 0;
  int max_steps = 0;
  std::string trace;
  bool check = false;
};

int cmd_run(const RunArgs& a, const CLI::App& sub) {
  if (!known_strategy(a.strategy)) {
    return fail(kBadArguments, "unknown strategy '" + a.strategy + "' (known: " + strategy_list() + ")");
  }
  if (sub.count("--max-steps") && a.max_steps < 1) {
    return fail(kBadArguments, "--max-steps must be at least 1");
  }
  RegionPtr region = load_region(a.env);
  if (!region) return kFailure;

  const dsp_run_options options{a.strategy.c_str(), a.seed, a.max_steps};
  dsp_trace* raw = nullptr;
  const dsp_status s = dsp_simulate(region.get(), &options, &raw);
  if (s == DSP_E_COLLISION) return fail(kInvariant, s);
  if (s != DSP_OK) return fail(kFailure, s);
  TracePtr trace(raw);

  char* row = nullptr;
  if (const dsp_status e = dsp_trace_csv_row(trace.get(), env_name(a.env).c_str(), &row);
      e != DSP_OK) {
    return fail(kFailure, e);
  }
  std::cout << StringPtr(row).get() << "\n";

  if (!a.trace.empty()) {
    char* json = nullptr;
    if (const dsp_status e = dsp_trace_to_json(trace.get(), &json); e != DSP_OK) {
      return fail(kFailure, e);
    }
    if (!write_file(a.trace, StringPtr(json).get())) return fail(kFailure, "cannot write " + a.trace);
  }

  if (a.check) {
    size_t violations = 0;
    char* report = nullptr;
    if (const dsp_status e = dsp_trace_check(trace.get(), &violations, &report); e != DSP_OK) {
      return fail(kFailure, e);
    }
    StringPtr text(report);
    if (violations > 0) {
      std::cerr << text.get();
      return fail(kInvariant, std::to_string(violations) + " invariant violation(s)");
    }
  }

  dsp_metrics m{};
  if (const dsp_status e = dsp_trace_metrics(trace.get(), &m); e != DSP_OK) return fail(kFailure, e);
  switch (m.outcome) {
    case DSP_COVERED: return kOk;
    case DSP_DEADLOCK: return kDeadlock;
    case DSP_STEP_LIMIT: return kStepLimit;
  }
  return kFailure;
}

struct CompareArgs {
  std::string env;
  std::vector<std::string> strategies{"fcdfs", "dflf", "bflf"};
  int reps = 1;
  std::uint64_t seed = 0;
  int max_steps = 0;
  std::string csv;
};

int cmd_compare(const CompareArgs& a) {
  for (const std::string& name : a.strategies) {
    if (!known_strategy(name)) {
      return fail(kBadArguments, "unknown strategy '" + name + "' (known: " + strategy_list() + ")");
    }
  }
  if (a.reps < 1) return fail(kBadArguments, "--reps must be at least 1");
  RegionPtr region = load_region(a.env);
  if (!region) return kFailure;

  std::vector<const char*> names;
  for (const std::string& name : a.strategies) names.push_back(name.c_str());
  char* csv = nullptr;
  char* table = nullptr;
  const dsp_status s = dsp_compare(region.get(), names.data(), names.size(), a.seed, a.reps,
                                   a.max_steps, env_name(a.env).c_str(), &csv, &table);
  if (s != DSP_OK) return fail(kFailure, s);
  StringPtr csv_text(csv), table_text(table);
  if (!a.csv.empty() && !write_file(a.csv, csv_text.get())) {
    return fail(kFailure, "cannot write " + a.csv);
  }
  std::cout << table_text.get();
  return kOk;
}

int cmd_oracle(const std::string& env) {
  RegionPtr region = load_region(env);
  if (!region) return kFailure;
  dsp_oracle_report r{};
  if (const dsp_status s = dsp_region_oracle(region.get(), &r); s != DSP_OK) {
    return fail(kFailure, s);
  }
  std::vector<int> xy(2 * r.median_count);
  size_t count = 0;
  if (const dsp_status s = dsp_region_median(region.get(), xy.data(), r.median_count, &count);
      s != DSP_OK) {
    return fail(kFailure, s);
  }
  std::cout << "V=" << r.cells << "\n";
  std::cout << "simply_connected=" << (r.simply_connected ? "true" : "false") << "\n";
  std::cout << "corners=" << r.corners << "\n";
  std::cout << "halls=" << r.halls << "\n";
  std::cout << "hall_tree_components=";
  if (r.hall_tree_components < 0) {
    std::cout << "n/a\n";
  } else {
    std::cout << r.hall_tree_components << "\n";
  }
  std::cout << "sum_distances=" << r.sum_distances << "\n";
  std::cout << "max_distance=" << r.max_distance << "\n";
  std::cout << "median=";
  for (size_t i = 0; i < count; ++i) {
    std::cout << (i ? " " : "") << "(" << xy[2 * i] << "," << xy[2 * i + 1] << ")";
  }
  std::cout << "\n";
  return kOk;
}

struct RenderArgs {
  std::string trace;
  std::string format = "ascii";
  int every = 1;
  std::string out = "frames";
};

int cmd_render(const RenderArgs& a) {
  if (a.every < 1) return fail(kBadArguments, "--every must be at least 1");
  const auto text = read_file(a.trace);
  if (!text) return fail(kFailure, "cannot read " + a.trace);
  dsp_trace* raw = nullptr;
  if (const dsp_status s = dsp_trace_from_json(text->c_str(), &raw); s != DSP_OK) {
    return fail(kFailure, s);
  }
  TracePtr trace(raw);
  const int last = dsp_trace_last_step(trace.get());

  if (a.format == "svg") {
    size_t count = 0;
    if (const dsp_status s = dsp_trace_svg_frames(trace.get(), a.every, a.out.c_str(), &count);
        s != DSP_OK) {
      return fail(kFailure, s);
    }
    std::cout << count << " frame(s) written to " << a.out << "\n";
    return kOk;
  }
  std::vector<int> steps;
  for (int t = a.every; t <= last; t += a.every) steps.push_back(t);
  if (last > 0 && (steps.empty() || steps.back() != last)) steps.push_back(last);
  for (int t : steps) {
    char* frame = nullptr;
    if (const dsp_status s = dsp_trace_ascii_frame(trace.get(), t, &frame); s != DSP_OK) {
      return fail(kFailure, s);
    }
    std::cout << "t=" << t << "\n" << StringPtr(frame).get() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform dispersal of robot swarms on grid regions"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a region map");
  gen_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  gen_cmd->add_option("--shape", gen.shape, "rect, random or gk")
      ->required()
      ->check(CLI::IsMember({"rect", "random", "gk"}));
  gen_cmd->add_option("--w", gen.w, "Rectangle width");
  gen_cmd->add_option("--h", gen.h, "Rectangle height");
  gen_cmd->add_option("--door", gen.door, "Rectangle door as X,Y");
  gen_cmd->add_option("--cells", gen.cells, "Random region size");
  gen_cmd->add_option("--seed", gen.seed, "Random region seed");
  gen_cmd->add_option("--r", gen.r, "Comb scale");
  gen_cmd->add_option("--k", gen.k, "Comb column joined to the first");
  gen_cmd->add_option("-o,--out", gen.out, "Output map file (stdout if absent)");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Simulate one strategy on a map");
  run_cmd->add_option("--env", run.env, "Map file")->required();
  run_cmd->add_option("--strategy", run.strategy, "Strategy name")->required();
  run_cmd->add_option("--seed", run.seed, "Run seed");
  run_cmd->add_option("--max-steps", run.max_steps, "Step limit (default 4V)");
  run_cmd->add_option("--trace", run.trace, "Write the JSON trace here");
  run_cmd->add_flag("--check", run.check, "Verify invariants on the recorded run");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Compare strategies over seeds");
  compare_cmd->add_option("--env", compare.env, "Map file")->required();
  compare_cmd->add_option("--strategies", compare.strategies, "Comma-separated names")
      ->delimiter(',');
  compare_cmd->add_option("--reps", compare.reps, "Runs per strategy");
  compare_cmd->add_option("--seed", compare.seed, "First seed");
  compare_cmd->add_option("--max-steps", compare.max_steps, "Step limit (default 4V)");
  compare_cmd->add_option("--csv", compare.csv, "Write one CSV row per run here");

  std::string oracle_env;
  auto* oracle_cmd = app.add_subcommand("oracle", "Print topology facts about a map");
  oracle_cmd->add_option("--env", oracle_env, "Map file")->required();

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Draw frames of a recorded trace");
  render_cmd->add_option("--trace", render.trace, "Trace JSON file")->required();
  render_cmd->add_option("--format", render.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--every", render.every, "Frame interval in steps");
  render_cmd->add_option("--out", render.out, "SVG output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArguments;
  }

  if (*gen_cmd) return cmd_gen(gen, *gen_cmd);
  if (*run_cmd) return cmd_run(run, *run_cmd);
  if (*compare_cmd) return cmd_compare(compare);
  if (*oracle_cmd) return cmd_oracle(oracle_env);
  if (*render_cmd) return cmd_render(render);
  return kBadArguments;
}
