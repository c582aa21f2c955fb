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

// Drives the installed command-line tool as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the tool with `args`; stdout is captured, stderr discarded.
Result cli(const std::string& args) {
  const std::string cmd = std::string("\"") + DISPERSAL_CLI + "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Workdir {
  fs::path path = fs::temp_directory_path() / "dispersal_cli_test";
  Workdir() {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~Workdir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return *this / name;
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen") {
  Workdir w;
  Result r = cli("gen --shape rect --w 30 --h 30 --door 13,13 -o " + w / "grid.txt");
  CHECK(r.code == 0);
  CHECK(r.out == "V=900 simply_connected=true\n");
  CHECK(slurp(w / "grid.txt").size() == 31 * 30);

  r = cli("gen --shape gk --r 1 --k 5 -o " + w / "gk.txt");
  CHECK(r.code == 0);
  CHECK(r.out.find("simply_connected=false") != std::string::npos);

  r = cli("gen --shape random --cells 50 --seed 3");
  CHECK(r.code == 0);
  CHECK(r.out == cli("gen --shape random --cells 50 --seed 3").out);

  CHECK(cli("gen --shape rect --w 0 --h 3 --door 0,0").code == 2);
  CHECK(cli("gen --shape rect --w 3 --h 3 --door 7,0").code == 2);
  CHECK(cli("gen --shape rect --w 3 --h 3").code == 2);
  CHECK(cli("gen --shape blob").code == 2);
  CHECK(cli("gen --shape gk --r 1 --k 40").code == 2);
}

TEST_CASE("run") {
  Workdir w;
  cli("gen --shape rect --w 30 --h 30 --door 13,13 -o " + w / "grid30.txt");
  Result r = cli("run --env " + w / "grid30.txt" + " --strategy fcdfs --check --trace " + w / "t.json");
  CHECK(r.code == 0);
  CHECK(r.out == "grid30,13,13,900,fcdfs,0,covered,1799,13620,32,13620,32,13620,true\n");
  CHECK(fs::file_size(w / "t.json") > 0);

  const std::string ring = w.write("ring.txt", "S..\n.#.\n...\n");
  r = cli("run --env " + ring + " --strategy fcdfs");
  CHECK(r.code == 3);
  CHECK(r.out.find(",deadlock,") != std::string::npos);

  CHECK(cli("run --env " + w / "grid30.txt" + " --strategy fcdfs --max-steps 20").code == 4);
  CHECK(cli("run --env " + w / "grid30.txt" + " --strategy nosuch").code == 2);
  CHECK(cli("run --env " + w / "missing.txt" + " --strategy fcdfs").code == 1);
  CHECK(cli("run --strategy fcdfs").code == 2);
  const std::string bad = w.write("bad.txt", "S?\n");
  CHECK(cli("run --env " + bad + " --strategy fcdfs").code == 1);
}

TEST_CASE("run --check passes on random regions") {
  Workdir w;
  for (int seed = 0; seed < 10; ++seed) {
    const std::string map = w / ("r" + std::to_string(seed) + ".txt");
    cli("gen --shape random --cells 120 --seed " + std::to_string(seed) + " -o " + map);
    CHECK(cli("run --env " + map + " --strategy fcdfs --check").code == 0);
    CHECK(cli("run --env " + map + " --strategy fcdfs5 --check").code == 0);
  }
}

TEST_CASE("compare") {
  Workdir w;
  cli("gen --shape rect --w 8 --h 1 --door 0,0 -o " + w / "line.txt");
  Result r = cli("compare --env " + w / "line.txt" + " --strategies fcdfs,dflf --reps 5 --csv " +
                 w / "rows.csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("fcdfs") != std::string::npos);
  std::istringstream rows(slurp(w / "rows.csv"));
  std::string line;
  std::getline(rows, line);
  CHECK(line.rfind("env,", 0) == 0);
  int fcdfs = 0, dflf = 0;
  while (std::getline(rows, line)) {
    // Corridor: both strategies need n(n-1)/2 = 28 moves.
    CHECK(line.find(",28,7,28,") != std::string::npos);
    fcdfs += line.find(",fcdfs,") != std::string::npos;
    dflf += line.find(",dflf,") != std::string::npos;
  }
  CHECK(fcdfs == 5);
  CHECK(dflf == 5);
  CHECK(cli("compare --env " + w / "line.txt" + " --strategies fcdfs,nosuch").code == 2);
}

TEST_CASE("oracle") {
  Workdir w;
  cli("gen --shape rect --w 30 --h 30 --door 13,13 -o " + w / "grid.txt");
  Result r = cli("oracle --env " + w / "grid.txt");
  CHECK(r.code == 0);
  CHECK(r.out.find("sum_distances=13620\n") != std::string::npos);
  CHECK(r.out.find("max_distance=32\n") != std::string::npos);

  r = cli("oracle --env " + w.write("l.txt", "#.\nS.\n"));
  CHECK(r.out.find("corners=2\n") != std::string::npos);
  CHECK(r.out.find("halls=1\n") != std::string::npos);
  CHECK(r.out.find("hall_tree_components=2\n") != std::string::npos);

  r = cli("oracle --env " + w.write("ring.txt", "S..\n.#.\n...\n"));
  CHECK(r.out.find("simply_connected=false\n") != std::string::npos);
  CHECK(cli("oracle --env " + w / "missing.txt").code == 1);
}

TEST_CASE("render") {
  Workdir w;
  cli("gen --shape rect --w 5 --h 1 --door 0,0 -o " + w / "line.txt");
  cli("run --env " + w / "line.txt" + " --strategy fcdfs --trace " + w / "t.json");

  Result r = cli("render --trace " + w / "t.json" + " --format ascii --every 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("t=4\n") != std::string::npos);
  CHECK(r.out.find("t=9\n*oooo\n") != std::string::npos);

  r = cli("render --trace " + w / "t.json" + " --format svg --every 4 --out " + w / "frames");
  CHECK(r.code == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(w / "frames")) files += e.path().extension() == ".svg";
  CHECK(files == 3);

  CHECK(cli("render --trace " + w.write("bad.json", "{oops") + " --format ascii").code == 1);
  CHECK(cli("render --trace " + w / "t.json" + " --format png").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("--help").code == 0);
}
