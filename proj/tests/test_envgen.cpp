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

#include "dispersal/envgen.hpp"
#include "dispersal/error.hpp"
#include "dispersal/topology.hpp"
#include "oracles.hpp"

using namespace dispersal;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("rectangles") {
  const Region r = rect(4, 3, {1, 2});
  CHECK(r.size() == 12);
  CHECK(r.door() == Cell{1, 2});
  CHECK(r.to_ascii() == ".S..\n....\n....\n");
  CHECK(code_of([] { rect(0, 3, {0, 0}); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { rect(3, 3, {3, 0}); }) == ErrorCode::DoorOutOfBounds);
  CHECK(code_of([] { rect(3, 3, {0, -1}); }) == ErrorCode::DoorOutOfBounds);
}

TEST_CASE("random regions are simply connected with the requested size") {
  for (int v : {10, 50, 200}) {
    for (std::uint64_t seed = 0; seed < 1000; seed += (v == 200 ? 4 : 1)) {
      const Region r = random_simply_connected(v, seed);
      REQUIRE(r.size() == static_cast<std::size_t>(v));
      REQUIRE(oracle::simply_connected(r.cells()));
    }
  }
  CHECK(random_simply_connected(1, 3).size() == 1);
  CHECK(code_of([] { random_simply_connected(0, 1); }) == ErrorCode::BadParameters);
}

TEST_CASE("random regions are deterministic in the seed") {
  CHECK(random_simply_connected(120, 42) == random_simply_connected(120, 42));
  CHECK_FALSE(random_simply_connected(120, 42) == random_simply_connected(120, 43));
}

TEST_CASE("random regions are not just straight bars") {
  int with_halls = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Region r = random_simply_connected(80, seed);
    for (Cell c : r.cells()) {
      if (classify(r, c).kind == VertexKind::Hall) {
        ++with_halls;
        break;
      }
    }
  }
  CHECK(with_halls > 25);
}

TEST_CASE("the comb region") {
  const Region g = g_k(1, 5);
  // Bottom row 20, ten columns of 30 above it, two one-cell extensions and a
  // top row joining columns 1 and 5 over 2r-wide gaps.
  const int r = 1, k = 5;
  const int expected = 20 * r * r + 10 * r * 30 * r * r + 2 + (2 * r * (k - 1) - 1);
  CHECK(static_cast<int>(g.size()) == expected);
  CHECK(g.size() == 329);
  CHECK(g.door() == Cell{0, 0});
  CHECK_FALSE(is_simply_connected(g));
  CHECK_FALSE(oracle::simply_connected(g.cells()));
  CHECK(g.contains({0, 31}));
  CHECK(g.contains({8, 31}));
  CHECK(g.contains({4, 31}));
  CHECK_FALSE(g.contains({10, 31}));
  CHECK_FALSE(g.contains({1, 1}));
  CHECK(g_k(2, 20).size() > g_k(2, 2).size());
  CHECK(code_of([] { g_k(0, 2); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { g_k(1, 1); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { g_k(1, 11); }) == ErrorCode::BadParameters);
}
