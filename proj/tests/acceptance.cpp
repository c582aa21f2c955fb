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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Counterexamples for the variant criterion are written to
// the directory given as the first argument (default: ./counterexamples).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dispersal/engine.hpp"
#include "dispersal/envgen.hpp"
#include "dispersal/error.hpp"
#include "dispersal/invariants.hpp"
#include "dispersal/strategies.hpp"
#include "dispersal/topology.hpp"
#include "oracles.hpp"

using namespace dispersal;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances and limits.
constexpr double kLimitC1 = 1.0;     // seconds
constexpr double kLimitC2 = 60.0;    // seconds
constexpr double kLimitC7 = 120.0;   // seconds
constexpr double kSlopeFcdfs = 3.0, kSlopeFcdfsTol = 0.3;
constexpr double kSlopeDflf = 4.0, kSlopeDflfTol = 0.4;
constexpr int kSuiteSize = 200;
constexpr int kSuiteMaxV = 400;
constexpr int kCornerRemovalMaxV = 60;
constexpr int kRandCornerSeeds = 10;
constexpr int kBaselineSeeds = 5;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

RunResult run_named(const Region& r, std::string_view name, std::uint64_t seed = 0) {
  return run(r, *make_strategy(name), seed);
}

std::size_t stay_count(const SimulationTrace& t) {
  std::size_t n = 0;
  std::set<int> active;  // robots active at the end of the previous step
  for (const StepRecord& s : t.steps) {
    for (const RobotRecord& r : s.robots) {
      if (active.contains(r.id) && r.act == Action::stay()) ++n;
    }
    active.clear();
    for (const RobotRecord& r : s.robots) {
      if (r.state == Lifecycle::Active) active.insert(r.id);
    }
  }
  return n;
}

bool all_settled_everywhere(const SimulationTrace& t) {
  if (t.steps.empty()) return false;
  const auto& last = t.steps.back().robots;
  std::set<Cell> cells;
  for (const RobotRecord& r : last) cells.insert(r.pos);
  return cells.size() == t.region.size();
}

// BFS over `cells` (given as a set) from the first cell; true if every cell is reached.
bool connected(const std::set<Cell>& cells) {
  if (cells.empty()) return true;
  std::set<Cell> seen{*cells.begin()};
  std::queue<Cell> q;
  q.push(*cells.begin());
  while (!q.empty()) {
    const Cell c = q.front();
    q.pop();
    for (Direction d : kDirections) {
      const Cell n = c + offset(d);
      if (cells.contains(n) && seen.insert(n).second) q.push(n);
    }
  }
  return seen.size() == cells.size();
}

std::vector<int> bfs_in(const std::set<Cell>& cells, const std::vector<Cell>& order, Cell src) {
  std::vector<int> dist(order.size(), -1);
  std::map<Cell, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::queue<Cell> q;
  dist[index.at(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    const Cell c = q.front();
    q.pop();
    for (Direction d : kDirections) {
      const Cell n = c + offset(d);
      if (!cells.contains(n)) continue;
      int& dn = dist[index.at(n)];
      if (dn < 0) {
        dn = dist[index.at(c)] + 1;
        q.push(n);
      }
    }
  }
  return dist;
}

double slope(const std::vector<int>& ns, const std::vector<std::int64_t>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(ns[i]), y = std::log(static_cast<double>(ys[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::string fmt(double v, int prec = 3) {
  std::ostringstream ss;
  ss.precision(prec);
  ss << std::fixed << v;
  return ss.str();
}

void criterion1() {
  const Region r = rect(30, 30, {13, 13});
  const std::int64_t oracle_sum = [&] {
    const auto d = oracle::relaxed_distances(r, r.door());
    return std::accumulate(d.begin(), d.end(), std::int64_t{0});
  }();
  const auto start = Clock::now();
  const RunResult res = run_named(r, "fcdfs");
  const double secs = seconds_since(start);
  const auto& m = res.metrics;
  const bool ok = oracle_sum == 13620 && m.total_travel == 13620 && m.max_travel == 32 &&
                  m.makespan == 1799 && secs < kLimitC1;
  report(1, ok,
         "door oracle sum " + std::to_string(oracle_sum) + ", total_travel " +
             std::to_string(m.total_travel) + ", max_travel " + std::to_string(m.max_travel) +
             ", makespan " + (m.makespan ? std::to_string(*m.makespan) : "none") + ", " +
             fmt(secs) + " s");
}

struct SuiteRuns {
  std::vector<Region> regions;
  std::vector<std::optional<RunResult>> fcdfs;  // empty when the run aborted
};

SuiteRuns criterion2() {
  SuiteRuns s;
  s.regions = oracle::random_suite(kSuiteSize, kSuiteMaxV);
  const auto start = Clock::now();
  int bad = 0;
  std::string first;
  for (const Region& r : s.regions) {
    const int v = static_cast<int>(r.size());
    std::string why;
    try {
      RunResult res = run_named(r, "fcdfs");
      const auto dist = oracle::relaxed_distances(r, r.door());
      const std::int64_t optimum = std::accumulate(dist.begin(), dist.end(), std::int64_t{0});
      const auto& m = res.metrics;
      if (m.outcome.kind != Outcome::Kind::Covered || !all_settled_everywhere(res.trace)) {
        why = "not covered";
      } else if (m.makespan != 2 * v - 1) {
        why = "makespan " + std::to_string(*m.makespan) + " != " + std::to_string(2 * v - 1);
      } else if (m.total_travel != optimum) {
        why = "total_travel " + std::to_string(m.total_travel) + " != " + std::to_string(optimum);
      } else if (stay_count(res.trace) != 0) {
        why = "stay actions";
      } else {
        for (const RobotTravel& rt : m.robots) {
          if (rt.travel != dist[*r.index_of(rt.final_pos)]) {
            why = "robot " + std::to_string(rt.id) + " travel mismatch";
            break;
          }
        }
      }
      s.fcdfs.push_back(std::move(res));
    } catch (const Error& e) {
      why = e.what();
      s.fcdfs.push_back(std::nullopt);
    }
    if (!why.empty()) {
      ++bad;
      if (first.empty()) first = "V=" + std::to_string(v) + ": " + why;
    }
  }
  const double secs = seconds_since(start);
  report(2, bad == 0 && secs < kLimitC2,
         std::to_string(s.regions.size()) + " regions (V <= " + std::to_string(kSuiteMaxV) + "), " +
             std::to_string(bad) + " failing" + (first.empty() ? "" : " [" + first + "]") + ", " +
             fmt(secs) + " s");
  return s;
}

void criterion3(const SuiteRuns& s) {
  int diff = 0;
  for (std::size_t i = 0; i < s.regions.size(); ++i) {
    try {
      RunResult b = run_named(s.regions[i], "fcdfs5");
      // Only the strategy name may differ between the two documents.
      b.trace.strategy = s.fcdfs[i] ? s.fcdfs[i]->trace.strategy : "";
      diff += !s.fcdfs[i] || to_json(b.trace) != to_json(s.fcdfs[i]->trace);
    } catch (const Error&) {
      ++diff;
    }
  }
  report(3, diff == 0,
         std::to_string(s.regions.size() - static_cast<std::size_t>(diff)) + "/" +
             std::to_string(s.regions.size()) + " traces byte-identical apart from the strategy name");
}

void criterion4(const SuiteRuns& s, const fs::path& archive) {
  struct Counter {
    std::string strategy;
    std::uint64_t seed;
    std::size_t region;
    std::string why;
  };
  std::vector<Counter> found;
  int runs = 0;
  const auto check = [&](std::string_view name, std::uint64_t seed, std::size_t i) {
    const Region& r = s.regions[i];
    const int v = static_cast<int>(r.size());
    ++runs;
    std::string why;
    try {
      const RunResult res = run_named(r, name, seed);
      if (res.metrics.outcome.kind != Outcome::Kind::Covered) {
        why = std::string(to_string(res.metrics.outcome.kind)) + " at t=" +
              std::to_string(res.metrics.outcome.t);
      } else if (res.metrics.makespan != 2 * v - 1) {
        why = "makespan " + std::to_string(*res.metrics.makespan);
      } else if (!res.metrics.optimal) {
        why = "total_travel " + std::to_string(res.metrics.total_travel) + " > " +
              std::to_string(res.metrics.optimum);
      }
    } catch (const Error& e) {
      why = std::string(to_string(e.code())) + ": " + e.what();
    }
    if (!why.empty()) found.push_back({std::string(name), seed, i, why});
  };
  for (std::size_t i = 0; i < s.regions.size(); ++i) {
    for (std::uint64_t seed = 0; seed < kRandCornerSeeds; ++seed) check("rand-corner", seed, i);
    check("left-hand", 0, i);
  }

  std::size_t rand_bad = 0, left_bad = 0;
  for (const Counter& c : found) (c.strategy == "left-hand" ? left_bad : rand_bad)++;
  std::string where;
  if (!found.empty()) {
    fs::create_directories(archive);
    std::ofstream index(archive / "index.txt");
    for (std::size_t k = 0; k < found.size(); ++k) {
      const Counter& c = found[k];
      const std::string stem = c.strategy + "_region" + std::to_string(c.region) + "_seed" +
                               std::to_string(c.seed);
      std::ofstream(archive / (stem + ".txt")) << s.regions[c.region].to_ascii();
      index << stem << ".txt " << c.strategy << " seed=" << c.seed << " V="
            << s.regions[c.region].size() << " : " << c.why << "\n";
    }
    where = ", archived in " + archive.string() + " [first: " + found.front().strategy +
            " seed " + std::to_string(found.front().seed) + " V=" +
            std::to_string(s.regions[found.front().region].size()) + ": " + found.front().why + "]";
  }
  report(4, found.empty(),
         std::to_string(runs) + " runs; rand-corner counterexamples " + std::to_string(rand_bad) +
             "/" + std::to_string(s.regions.size() * kRandCornerSeeds) + ", left-hand " +
             std::to_string(left_bad) + "/" + std::to_string(s.regions.size()) + where);
}

void criterion5(const SuiteRuns& s) {
  int hall_bad = 0, corner_bad = 0, halls = 0, corners = 0;
  for (const Region& r : s.regions) {
    const std::set<Cell> all(r.cells().begin(), r.cells().end());
    const bool small = static_cast<int>(r.size()) <= kCornerRemovalMaxV;
    std::vector<std::vector<int>> full;
    if (small) {
      for (Cell c : r.cells()) full.push_back(bfs_in(all, r.cells(), c));
    }
    for (Cell c : r.cells()) {
      const VertexKind kind = classify(r, c).kind;
      if (kind == VertexKind::Hall) {
        ++halls;
        std::set<Cell> rest = all;
        rest.erase(c);
        hall_bad += connected(rest);  // a hall must disconnect the region
      }
      if (kind != VertexKind::Corner || !small || r.size() == 1) continue;
      ++corners;
      std::set<Cell> rest = all;
      rest.erase(c);
      std::vector<Cell> order(rest.begin(), rest.end());
      bool ok = oracle::simply_connected(order);
      for (std::size_t i = 0; ok && i < order.size(); ++i) {
        const auto d = bfs_in(rest, order, order[i]);
        const std::size_t gi = *r.index_of(order[i]);
        for (std::size_t j = 0; j < order.size(); ++j) {
          if (d[j] != full[gi][*r.index_of(order[j])]) {
            ok = false;
            break;
          }
        }
      }
      corner_bad += !ok;
    }
  }
  report(5, hall_bad == 0 && corner_bad == 0,
         std::to_string(halls) + " halls checked (" + std::to_string(hall_bad) +
             " not cut vertices), " + std::to_string(corners) + " corners removed on V <= " +
             std::to_string(kCornerRemovalMaxV) + " (" + std::to_string(corner_bad) + " changed distances)");
}

void criterion6(const SuiteRuns& s) {
  std::size_t violations = 0, traces = 0;
  std::string first;
  for (std::size_t i = 0; i < s.regions.size(); ++i) {
    for (std::string_view name : {"fcdfs", "fcdfs5"}) {
      std::optional<RunResult> res = name == "fcdfs" ? s.fcdfs[i] : std::nullopt;
      if (name != "fcdfs") {
        try {
          res = run_named(s.regions[i], name);
        } catch (const Error& e) {
          if (first.empty()) first = e.what();
        }
      }
      if (!res) {
        ++violations;
        continue;
      }
      ++traces;
      const auto vs = check_trace(res->trace, make_strategy(name)->checks_fcdfs_invariants());
      violations += vs.size();
      if (!vs.empty() && first.empty()) {
        first = std::string(to_string(vs.front().kind)) + " at t=" + std::to_string(vs.front().t) +
                ": " + vs.front().detail;
      }
    }
  }
  report(6, violations == 0 && traces == 2 * s.regions.size(),
         std::to_string(traces) + " traces checked, " + std::to_string(violations) + " violations" +
             (first.empty() ? "" : " [" + first + "]"));
}

void criterion7() {
  const auto start = Clock::now();
  const std::vector<int> ns{8, 16, 32};
  std::vector<std::int64_t> fc, df;
  for (int n : ns) {
    const Region r = rect(n, n, {0, 0});
    fc.push_back(run_named(r, "fcdfs").metrics.total_moves);
    df.push_back(run_named(r, "dflf").metrics.total_moves);
  }
  const double secs = seconds_since(start);
  const double sf = slope(ns, fc), sd = slope(ns, df);
  const bool ok = std::abs(sf - kSlopeFcdfs) <= kSlopeFcdfsTol &&
                  std::abs(sd - kSlopeDflf) <= kSlopeDflfTol && secs < kLimitC7;
  report(7, ok,
         "fcdfs moves " + std::to_string(fc[0]) + "/" + std::to_string(fc[1]) + "/" +
             std::to_string(fc[2]) + " slope " + fmt(sf) + "; dflf moves " + std::to_string(df[0]) +
             "/" + std::to_string(df[1]) + "/" + std::to_string(df[2]) + " slope " + fmt(sd) + ", " +
             fmt(secs) + " s");
}

void criterion8() {
  std::string detail;
  bool ok = true;
  const std::pair<const char*, Region> cases[] = {
      {"3x3 ring", Region::from_ascii("S..\n.#.\n...\n")},
      {"g_k(1,5)", g_k(1, 5)},
  };
  for (const auto& [label, r] : cases) {
    std::string got;
    try {
      const RunResult res = run_named(r, "fcdfs");
      got = std::string(to_string(res.trace.outcome.kind)) + " at t=" +
            std::to_string(res.trace.outcome.t);
      ok = ok && res.trace.outcome.kind == Outcome::Kind::Deadlock;
    } catch (const Error& e) {
      got = e.what();
      ok = false;
    }
    detail += std::string(detail.empty() ? "" : ", ") + label + " " + got;
  }
  report(8, ok, detail);
}

void criterion9() {
  const Region r = rect(30, 30, {13, 13});
  const auto mean_moves = [&](std::string_view name) {
    double sum = 0;
    for (std::uint64_t seed = 0; seed < kBaselineSeeds; ++seed) {
      sum += static_cast<double>(run_named(r, name, seed).metrics.total_moves);
    }
    return sum / kBaselineSeeds;
  };
  const double dflf = mean_moves("dflf"), bflf = mean_moves("bflf"), fcdfs = mean_moves("fcdfs");
  report(9, dflf > bflf && bflf > fcdfs,
         "mean total moves dflf " + fmt(dflf, 1) + " > bflf " + fmt(bflf, 1) + " > fcdfs " +
             fmt(fcdfs, 1));
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path archive = argc > 1 ? fs::path(argv[1]) : fs::path("counterexamples");
  try {
    criterion1();
    const SuiteRuns suite = criterion2();
    criterion3(suite);
    criterion4(suite, archive);
    criterion5(suite);
    criterion6(suite);
    criterion7();
    criterion8();
    criterion9();
  } catch (const std::exception& e) {
    std::printf("FAIL aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
