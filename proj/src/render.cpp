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

#include "dispersal/render.hpp"

#include <cstdio>
#include <fstream>

#include "dispersal/error.hpp"

namespace dispersal {

namespace {

constexpr int kCell = 20;

const StepRecord* step_at(const SimulationTrace& trace, int t) {
  if (t < 0 || t > trace.last_step()) {
    throw Error(ErrorCode::StepOutOfRange, "step " + std::to_string(t) + " outside 0.." +
                                               std::to_string(trace.last_step()));
  }
  return t == 0 ? nullptr : &trace.steps[static_cast<std::size_t>(t - 1)];
}

char glyph(const RobotRecord& r) {
  if (r.state == Lifecycle::Settled) return 'o';
  if (!r.heading) return '*';
  switch (*r.heading) {
    case Direction::Up: return '^';
    case Direction::Right: return '>';
    case Direction::Down: return 'v';
    case Direction::Left: return '<';
  }
  return '*';
}

// Arrow triangle pointing along `d`, inside the unit square at (px, py).
std::string arrow_points(int px, int py, Direction d) {
  const int c = kCell / 2;
  const int m = 3;
  int pts[6] = {};
  switch (d) {
    case Direction::Up: pts[0] = c; pts[1] = m; pts[2] = kCell - m; pts[3] = kCell - m; pts[4] = m; pts[5] = kCell - m; break;
    case Direction::Right: pts[0] = kCell - m; pts[1] = c; pts[2] = m; pts[3] = kCell - m; pts[4] = m; pts[5] = m; break;
    case Direction::Down: pts[0] = c; pts[1] = kCell - m; pts[2] = m; pts[3] = m; pts[4] = kCell - m; pts[5] = m; break;
    case Direction::Left: pts[0] = m; pts[1] = c; pts[2] = kCell - m; pts[3] = m; pts[4] = kCell - m; pts[5] = kCell - m; break;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d,%d %d,%d %d,%d", px + pts[0], py + pts[1], px + pts[2],
                py + pts[3], px + pts[4], py + pts[5]);
  return buf;
}

}  // namespace

std::string ascii_frame(const SimulationTrace& trace, int t) {
  const StepRecord* step = step_at(trace, t);
  std::string map = trace.region.to_ascii();
  const Bounds& b = trace.region.bounds();
  const auto row_len = static_cast<std::size_t>(b.width() + 1);
  if (step) {
    for (const RobotRecord& r : step->robots) {
      const auto row = static_cast<std::size_t>(b.max_y - r.pos.y);
      const auto col = static_cast<std::size_t>(r.pos.x - b.min_x);
      map[row * row_len + col] = glyph(r);
    }
  }
  return map;
}

std::string svg_frame(const SimulationTrace& trace, int t) {
  const StepRecord* step = step_at(trace, t);
  const Region& region = trace.region;
  const Bounds& b = region.bounds();
  const int width = b.width() * kCell;
  const int height = b.height() * kCell;
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                width, height, width, height);
  out += buf;
  std::snprintf(buf, sizeof buf, "<title>t=%d</title>\n", t);
  out += buf;
  for (int y = b.max_y; y >= b.min_y; --y) {
    for (int x = b.min_x; x <= b.max_x; ++x) {
      const Cell c{x, y};
      const int px = (x - b.min_x) * kCell;
      const int py = (b.max_y - y) * kCell;
      const char* fill = region.contains(c) ? "#ffffff" : "#3b6fb6";
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\" "
                    "stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n",
                    px, py, kCell, kCell, fill);
      out += buf;
    }
  }
  {
    const int px = (region.door().x - b.min_x) * kCell;
    const int py = (b.max_y - region.door().y) * kCell;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"none\" "
                  "stroke=\"#2a9d3a\" stroke-width=\"2\"/>\n",
                  px + 1, py + 1, kCell - 2, kCell - 2);
    out += buf;
  }
  if (step) {
    for (const RobotRecord& r : step->robots) {
      const int px = (r.pos.x - b.min_x) * kCell;
      const int py = (b.max_y - r.pos.y) * kCell;
      const int c = kCell / 2;
      if (r.state == Lifecycle::Settled) {
        std::snprintf(buf, sizeof buf,
                      "<polygon points=\"%d,%d %d,%d %d,%d %d,%d\" fill=\"#d0521b\"/>\n", px + c,
                      py + 2, px + kCell - 2, py + c, px + c, py + kCell - 2, px + 2, py + c);
      } else if (r.heading) {
        std::snprintf(buf, sizeof buf, "<polygon points=\"%s\" fill=\"#222222\"/>\n",
                      arrow_points(px, py, *r.heading).c_str());
      } else {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%d\" cy=\"%d\" r=\"%d\" fill=\"#222222\"/>\n",
                      px + c, py + c, c - 4);
      }
      out += buf;
    }
  }
  out += "</svg>\n";
  return out;
}

std::vector<int> sampled_steps(int last_step, int every) {
  if (every < 1) throw Error(ErrorCode::BadParameters, "frame interval must be at least 1");
  std::vector<int> steps;
  for (int t = every; t <= last_step; t += every) steps.push_back(t);
  if (last_step > 0 && (steps.empty() || steps.back() != last_step)) steps.push_back(last_step);
  return steps;
}

std::vector<std::filesystem::path> svg_frames(const SimulationTrace& trace, int every,
                                              const std::filesystem::path& out_dir) {
  const auto steps = sampled_steps(trace.last_step(), every);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (int t : steps) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%06d.svg", t);
    const auto path = out_dir / name;
    std::ofstream file(path, std::ios::binary);
    file << svg_frame(trace, t);
    if (!file) throw Error(ErrorCode::Io, "cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace dispersal
