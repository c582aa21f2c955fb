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

#include <json.hpp>

#include <cstdio>

#include "dispersal/error.hpp"
#include "dispersal/trace.hpp"

namespace dispersal {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Outcome::Kind kind) {
  switch (kind) {
    case Outcome::Kind::Covered: return "covered";
    case Outcome::Kind::Deadlock: return "deadlock";
    case Outcome::Kind::StepLimit: return "limit";
  }
  return "limit";
}

// Positions are written relative to the region's bounding box so that the
// embedded map (which always starts at the origin) lines up with them.
// Written by hand: traces hold one object per robot per step and the
// generic DOM is an order of magnitude slower at that volume.
std::string to_json(const SimulationTrace& trace) {
  const Cell origin{trace.region.bounds().min_x, trace.region.bounds().min_y};
  std::string out;
  out += "{\"env\":";
  out += ordered_json(trace.region.to_ascii()).dump();
  out += ",\"strategy\":";
  out += ordered_json(trace.strategy).dump();
  out += ",\"seed\":" + std::to_string(trace.seed);
  out += ",\"steps\":[";
  char buf[96];
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& step = trace.steps[i];
    if (i) out += ',';
    out += "{\"t\":" + std::to_string(step.t) + ",\"spawn\":";
    out += step.spawned ? std::to_string(*step.spawned) : "null";
    out += ",\"robots\":[";
    for (std::size_t j = 0; j < step.robots.size(); ++j) {
      const RobotRecord& r = step.robots[j];
      const Cell p = r.pos - origin;
      const char dir[4] = {'"', r.heading ? to_char(*r.heading) : 'n', '"', 0};
      std::snprintf(buf, sizeof buf,
                    "%s{\"id\":%d,\"pos\":[%d,%d],\"state\":\"%c\",\"act\":\"%c\",\"dir\":%s}",
                    j ? "," : "", r.id, p.x, p.y, r.state == Lifecycle::Active ? 'A' : 'S',
                    to_char(r.act), r.heading ? dir : "null");
      out += buf;
    }
    out += "]}";
  }
  out += "],\"outcome\":{\"kind\":\"";
  out += to_string(trace.outcome.kind);
  out += "\",\"t\":" + std::to_string(trace.outcome.t) + "}}\n";
  return out;
}

namespace {

Action action_from(const std::string& code) {
  if (code.size() != 1) throw Error(ErrorCode::BadTrace, "bad action code '" + code + "'");
  if (code == ".") return Action::stay();
  if (code == "X") return Action::settle();
  if (const auto d = direction_from_char(code[0])) return Action::move(*d);
  throw Error(ErrorCode::BadTrace, "bad action code '" + code + "'");
}

}  // namespace

SimulationTrace trace_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    SimulationTrace trace{Region::from_ascii(doc.at("env").get<std::string>()),
                          doc.at("strategy").get<std::string>(), doc.at("seed").get<std::uint64_t>(),
                          {}, {}};
    int last_t = 0;
    for (const auto& s : doc.at("steps")) {
      StepRecord step;
      step.t = s.at("t").get<int>();
      if (step.t != last_t + 1) throw Error(ErrorCode::BadTrace, "step numbers must increase by one");
      last_t = step.t;
      if (!s.at("spawn").is_null()) step.spawned = s.at("spawn").get<int>();
      for (const auto& o : s.at("robots")) {
        RobotRecord r;
        r.id = o.at("id").get<int>();
        const auto& pos = o.at("pos");
        r.pos = {pos.at(0).get<int>(), pos.at(1).get<int>()};
        const auto state = o.at("state").get<std::string>();
        if (state != "A" && state != "S") throw Error(ErrorCode::BadTrace, "bad robot state '" + state + "'");
        r.state = state == "A" ? Lifecycle::Active : Lifecycle::Settled;
        r.act = action_from(o.at("act").get<std::string>());
        if (o.contains("dir") && !o.at("dir").is_null()) {
          const auto dir = o.at("dir").get<std::string>();
          const auto d = dir.size() == 1 ? direction_from_char(dir[0]) : std::nullopt;
          if (!d) throw Error(ErrorCode::BadTrace, "bad heading '" + dir + "'");
          r.heading = d;
        }
        if (!trace.region.contains(r.pos)) {
          throw Error(ErrorCode::BadTrace, "robot " + std::to_string(r.id) + " outside the map");
        }
        step.robots.push_back(r);
      }
      trace.steps.push_back(std::move(step));
    }
    const auto& outcome = doc.at("outcome");
    const auto kind = outcome.at("kind").get<std::string>();
    if (kind == "covered") {
      trace.outcome.kind = Outcome::Kind::Covered;
    } else if (kind == "deadlock") {
      trace.outcome.kind = Outcome::Kind::Deadlock;
    } else if (kind == "limit") {
      trace.outcome.kind = Outcome::Kind::StepLimit;
    } else {
      throw Error(ErrorCode::BadTrace, "bad outcome kind '" + kind + "'");
    }
    trace.outcome.t = outcome.at("t").get<int>();
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadTrace, std::string("malformed trace: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadTrace) throw;
    throw Error(ErrorCode::BadTrace, std::string("malformed trace: ") + e.what());
  }
}

}  // namespace dispersal
