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

#include <filesystem>
#include <string>
#include <vector>

#include "dispersal/trace.hpp"

namespace dispersal {

/// Map of the configuration at the end of step t (t = 0 is the empty
/// region). '#' wall, '.' empty, 'S' empty door, '^' '>' 'v' '<' active
/// robot by heading, '*' active robot without a heading yet, 'o' settled.
/// Throws Error{StepOutOfRange}.
std::string ascii_frame(const SimulationTrace& trace, int t);

/// SVG 1.1 still of step t: unit squares, filled walls, arrows for active
/// robots and diamonds for settled ones.
std::string svg_frame(const SimulationTrace& trace, int t);

/// Steps every, 2*every, ... plus the final step when it is not a multiple.
std::vector<int> sampled_steps(int last_step, int every);

/// Writes frame_%06d.svg for each sampled step. Throws Error{Io}.
std::vector<std::filesystem::path> svg_frames(const SimulationTrace& trace, int every,
                                              const std::filesystem::path& out_dir);

}  // namespace dispersal
