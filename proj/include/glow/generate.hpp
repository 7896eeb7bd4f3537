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


// Seeded synthetic benchmarks: netlists and thermal fields.

#pragma once

#include <cstdint>
#include <random>

#include "glow/ingest.hpp"

namespace glow {

/// mt19937_64 with a fixed integer-to-double mapping, so files generated
/// from a seed are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

private:
  std::mt19937_64 engine_;
};

struct DeriveOptions {
  int nets = 35;
  double chip_width = 20.0;   // mm
  double chip_height = 20.0;  // mm
  std::uint64_t seed = 1;
  int pins_min = 2;
  int pins_max = 6;
  int pins_total = 0;         // 0: each net draws its own count
  int blocks = 4;             // functional blocks pins gather around
  double block_radius = 1.0;  // mm, half-width of a block
  double scatter_prob = 0.1;  // chance a pin ignores the blocks
};

/// Throws std::invalid_argument on an empty or inconsistent request.
Netlist derive_netlist(const DeriveOptions& opt);

struct ThermalOptions {
  int hotspots = 4;
  double peak = 25.0;   // degC
  double sigma = 2.0;   // mm
  int cols = 20;
  int rows = 20;
  double tile = 1.0;    // mm
  std::uint64_t seed = 1;
};

/// Sum of Gaussian hotspots sampled at tile centres, clipped to [0, peak].
ThermalProfile generate_thermal(const ThermalOptions& opt);

} // namespace glow
