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

// WDM trunk placement and link-to-trunk access geometry.

#pragma once

#include <span>
#include <vector>

#include "glow/geometry.hpp"
#include "glow/ingest.hpp"
#include "glow/preprocess.hpp"

namespace glow {

enum class Orientation { horizontal, vertical };

/// A straight waveguide. Horizontal trunks sit at y = coordinate and run over
/// x in [lo, hi]; vertical trunks swap the axes.
struct Trunk {
  int id = 0;
  Orientation orientation = Orientation::horizontal;
  double coordinate = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int capacity = 32;
  int round = 0;  // placement round that created it

  bool horizontal() const { return orientation == Orientation::horizontal; }
  double length() const { return hi - lo; }
  Point start() const { return horizontal() ? Point{lo, coordinate} : Point{coordinate, lo}; }
  Point end() const { return horizontal() ? Point{hi, coordinate} : Point{coordinate, hi}; }

  /// Position along the trunk axis of `p`'s perpendicular projection, clamped to the span.
  double project(const Point& p) const;
  /// Point on the trunk at axis position `t`.
  Point at(double t) const { return horizontal() ? Point{t, coordinate} : Point{coordinate, t}; }

  friend bool operator==(const Trunk&, const Trunk&) = default;
};

struct TrunkPlan {
  double chip_width = 0.0;
  double chip_height = 0.0;
  int c_max = 32;
  std::vector<Trunk> trunks;  // trunks[i].id == i, creation order
  int next_round = 0;

  long long capacity() const { return static_cast<long long>(trunks.size()) * c_max; }
};

/// Rounds past this many are not attempted by placement or revisions.
inline constexpr int kMaxPlacementRounds = 24;

/// Places trunks round by round (horizontal first, alternating, doubling the
/// slab count every second round) until trunk_count * c_max >= link count.
/// Throws PlacementError when no trunk fits or capacity cannot be reached.
TrunkPlan place_trunks(const OpticalNetlist& onet, const ThermalProfile& thermal,
                       const Config& cfg);

/// One more full placement round (skipping rounds that place nothing).
/// When `stranded_links` is given, the schedule restarts from the full-chip
/// rounds and only those links steer the new trunks. Returns the number of trunks added; zero once rounds are
/// exhausted.
int add_placement_round(TrunkPlan& plan, const OpticalNetlist& onet,
                        const ThermalProfile& thermal, const Config& cfg,
                        std::span<const int> stranded_links = {});

/// True when every tile under the trunk is within temp_threshold.
bool trunk_is_cool(const Trunk& trunk, const ThermalProfile& thermal, double temp_threshold);

/// Converter placement and cost of routing one link over one trunk.
struct LinkAccess {
  int link_id = 0;
  int trunk_id = 0;
  double wl_e = 0.0;  // mm of Cu stub, driver->modulator plus detector->sink
  double wl_o = 0.0;  // mm on the waveguide
  Point mod_pos;
  Point det_pos;
  double t_var = 0.0;  // worst |delta T| at the two converters
  bool timing_ok = false;
  bool detection_ok = false;
  bool thermal_ok = false;  // includes ring aliasing and the laser budget
  double p_path = 0.0;
  double p_ring = 0.0;  // both rings

  bool feasible() const { return timing_ok && thermal_ok; }

  friend bool operator==(const LinkAccess&, const LinkAccess&) = default;
};

/// Shortest-distance access: converters at the clamped projections of the
/// link's driver and sink onto the trunk.
LinkAccess link_access(const Link& link, const Trunk& trunk, const ThermalProfile& thermal,
                       const DeviceModels& models);

/// Access with converters placed at explicit axis positions along the trunk.
LinkAccess link_access_at(const Link& link, const Trunk& trunk, double mod_axis,
                          double det_axis, const ThermalProfile& thermal,
                          const DeviceModels& models);

struct Crossing {
  int horizontal = 0;  // trunk id
  int vertical = 0;    // trunk id

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Horizontal/vertical trunk pairs that physically intersect, ordered by
/// horizontal rank then vertical rank.
std::vector<Crossing> trunk_crossings(const TrunkPlan& plan);

} // namespace glow
