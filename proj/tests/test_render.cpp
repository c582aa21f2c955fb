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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dispersal/engine.hpp"
#include "dispersal/envgen.hpp"
#include "dispersal/error.hpp"
#include "dispersal/render.hpp"
#include "dispersal/strategies.hpp"

using namespace dispersal;
namespace fs = std::filesystem;

namespace {

RunResult run_named(const Region& r, std::string_view name, std::uint64_t seed = 0) {
  return run(r, *make_strategy(name), seed);
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("dispersal_render_" + tag)) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_of(const std::string& s, std::string_view glyphs) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](char c) { return glyphs.find(c) != std::string_view::npos; }));
}

}  // namespace

TEST_CASE("ascii frames of a one-by-two corridor") {
  const RunResult res = run_named(Region::from_ascii("S.\n"), "fcdfs");
  CHECK(ascii_frame(res.trace, 0) == "S.\n");
  CHECK(ascii_frame(res.trace, 1) == "*.\n");
  CHECK(ascii_frame(res.trace, 2) == "S>\n");
  CHECK(ascii_frame(res.trace, 3) == "*o\n");
  CHECK_THROWS_AS(ascii_frame(res.trace, 4), Error);
  CHECK_THROWS_AS(ascii_frame(res.trace, -1), Error);
}

TEST_CASE("walls are drawn inside the bounding box") {
  const RunResult res = run_named(Region::from_ascii("#.\nS.\n"), "fcdfs");
  CHECK(ascii_frame(res.trace, 0) == "#.\nS.\n");
  CHECK(ascii_frame(res.trace, res.trace.last_step()) == "#o\n*o\n");
}

TEST_CASE("every robot is drawn exactly once") {
  const RunResult res = run_named(random_simply_connected(90, 5), "fcdfs");
  for (const StepRecord& s : res.trace.steps) {
    const std::string frame = ascii_frame(res.trace, s.t);
    CHECK(count_of(frame, "^>v<*o") == s.robots.size());
  }
  const std::string last = ascii_frame(res.trace, res.trace.last_step());
  CHECK(count_of(last, ".S") == 0);
}

TEST_CASE("step sampling") {
  CHECK(sampled_steps(10, 3) == std::vector<int>{3, 6, 9, 10});
  CHECK(sampled_steps(9, 3) == std::vector<int>{3, 6, 9});
  CHECK(sampled_steps(2, 5) == std::vector<int>{2});
  CHECK(sampled_steps(0, 1).empty());
  CHECK_THROWS_AS(sampled_steps(5, 0), Error);
}

TEST_CASE("svg frames on disk") {
  const RunResult res = run_named(rect(5, 1, {0, 0}), "fcdfs");
  REQUIRE(res.trace.last_step() == 9);

  TempDir every1("every1");
  const auto files = svg_frames(res.trace, 1, every1.path);
  CHECK(files.size() == 9);
  CHECK(files.front().filename() == "frame_000001.svg");
  CHECK(files.back().filename() == "frame_000009.svg");
  for (const auto& f : files) {
    const std::string body = slurp(f);
    CHECK(body.rfind("<?xml", 0) == 0);
    CHECK(body.find("</svg>") != std::string::npos);
  }

  TempDir every4("every4");
  CHECK(svg_frames(res.trace, 4, every4.path).size() == 3);  // ceil(9 / 4)

  TempDir whole("whole");
  CHECK(svg_frames(res.trace, 9, whole.path).size() == 1);
}

TEST_CASE("svg output is deterministic") {
  const RunResult a = run_named(random_simply_connected(40, 2), "fcdfs");
  const RunResult b = run_named(random_simply_connected(40, 2), "fcdfs");
  for (int t : {1, 10, a.trace.last_step()}) CHECK(svg_frame(a.trace, t) == svg_frame(b.trace, t));
  CHECK(svg_frame(a.trace, 1) != svg_frame(a.trace, a.trace.last_step()));
}

TEST_CASE("unwritable output directory") {
  const RunResult res = run_named(rect(2, 1, {0, 0}), "fcdfs");
  TempDir d("blocked");
  std::ofstream(d.path) << "file, not a directory";
  try {
    svg_frames(res.trace, 1, d.path / "sub");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
