/* Copyright 2026 The GLOW Router Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */


#include "glow/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace glow {

namespace {

double snap(double v, double hi) { return std::clamp(std::round(v * 1000.0) / 1000.0, 0.0, hi); }

} // namespace

int Rng::uniform_int(int lo, int hi) {
  const double span = static_cast<double>(hi) - lo + 1.0;
  return std::min(hi, lo + static_cast<int>(std::floor(uniform() * span)));
}

Netlist derive_netlist(const DeriveOptions& opt) {
  if (opt.nets < 1) {
    throw std::invalid_argument("--nets must be at least 1");
  }
  if (opt.pins_min < 2 || opt.pins_max < opt.pins_min) {
    throw std::invalid_argument("pin range must satisfy 2 <= pins-min <= pins-max");
  }
  if (!(opt.chip_width > 0) || !(opt.chip_height > 0)) {
    throw std::invalid_argument("chip dimensions must be positive");
  }
  const long long lo_total = static_cast<long long>(opt.nets) * opt.pins_min;
  const long long hi_total = static_cast<long long>(opt.nets) * opt.pins_max;
  if (opt.pins_total != 0 && (opt.pins_total < lo_total || opt.pins_total > hi_total)) {
    throw std::invalid_argument("--pins-total must lie in [" + std::to_string(lo_total) + ", " +
                                std::to_string(hi_total) + "]");
  }

  Rng rng(opt.seed);
  std::vector<int> counts(static_cast<size_t>(opt.nets), opt.pins_min);
  if (opt.pins_total == 0) {
    for (int& c : counts) {
      c = rng.uniform_int(opt.pins_min, opt.pins_max);
    }
  } else {
    long long extra = opt.pins_total - lo_total;
    while (extra > 0) {
      const int n = rng.uniform_int(0, opt.nets - 1);
      if (counts[n] < opt.pins_max) {
        ++counts[n];
        --extra;
      }
    }
  }

  std::vector<Point> blocks;
  for (int b = 0; b < std::max(1, opt.blocks); ++b) {
    blocks.push_back({rng.uniform(0.0, opt.chip_width), rng.uniform(0.0, opt.chip_height)});
  }

  Netlist out;
  out.chip_width = opt.chip_width;
  out.chip_height = opt.chip_height;
  for (int n = 0; n < opt.nets; ++n) {
    Net net;
    net.id = n;
    for (int p = 0; p < counts[n]; ++p) {
      Point pt;
      if (opt.blocks > 0 && rng.uniform() >= opt.scatter_prob) {
        const Point& c = blocks[rng.uniform_int(0, static_cast<int>(blocks.size()) - 1)];
        pt = {c.x + rng.uniform(-opt.block_radius, opt.block_radius),
              c.y + rng.uniform(-opt.block_radius, opt.block_radius)};
      } else {
        pt = {rng.uniform(0.0, opt.chip_width), rng.uniform(0.0, opt.chip_height)};
      }
      net.pins.push_back({snap(pt.x, opt.chip_width), snap(pt.y, opt.chip_height)});
    }
    net.driver = rng.uniform_int(0, counts[n] - 1);
    out.nets.push_back(std::move(net));
  }
  return out;
}

ThermalProfile generate_thermal(const ThermalOptions& opt) {
  if (opt.hotspots < 0 || opt.cols < 1 || opt.rows < 1 || !(opt.tile > 0) || opt.peak < 0 ||
      !(opt.sigma > 0)) {
    throw std::invalid_argument("invalid thermal generation parameters");
  }
  Rng rng(opt.seed);
  struct Spot {
    double x, y, amp;
  };
  std::vector<Spot> spots;
  const double w = opt.cols * opt.tile, h = opt.rows * opt.tile;
  for (int k = 0; k < opt.hotspots; ++k) {
    const double x = rng.uniform(0.0, w);
    const double y = rng.uniform(0.0, h);
    spots.push_back({x, y, rng.uniform(opt.peak / 2.0, opt.peak)});
  }
  std::vector<double> values(static_cast<size_t>(opt.cols) * opt.rows, 0.0);
  for (int r = 0; r < opt.rows; ++r) {
    for (int c = 0; c < opt.cols; ++c) {
      const double cx = (c + 0.5) * opt.tile, cy = (r + 0.5) * opt.tile;
      double v = 0.0;
      for (const Spot& s : spots) {
        const double d2 = (cx - s.x) * (cx - s.x) + (cy - s.y) * (cy - s.y);
        v += s.amp * std::exp(-d2 / (2.0 * opt.sigma * opt.sigma));
      }
      values[static_cast<size_t>(r) * opt.cols + c] = std::clamp(v, 0.0, opt.peak);
    }
  }
  return ThermalProfile(opt.cols, opt.rows, opt.tile, std::move(values));
}

} // namespace glow
