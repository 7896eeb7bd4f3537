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

#include "glow/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "glow/errors.hpp"
#include "glow/oil.hpp"

namespace glow {

double Trunk::project(const Point& p) const {
  return std::clamp(horizontal() ? p.x : p.y, lo, hi);
}

bool trunk_is_cool(const Trunk& trunk, const ThermalProfile& thermal, double temp_threshold) {
  return thermal.max_along(trunk.start(), trunk.end()) <= temp_threshold;
}

namespace {

double lower_median(std::vector<double> v) {
  const size_t mid = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  return v[mid];
}

/// Centre of the nearest tile band (row for a horizontal trunk, column for a
/// vertical one) along which the trunk is cool; nullopt when none is.
std::optional<double> nearest_cool_coordinate(const Trunk& trunk, const ThermalProfile& thermal,
                                              double threshold, double chip_extent) {
  if (trunk_is_cool(trunk, thermal, threshold)) {
    return trunk.coordinate;
  }
  const int bands = trunk.horizontal() ? thermal.rows() : thermal.cols();
  std::optional<double> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int b = 0; b < bands; ++b) {
    const double band_lo = b * thermal.tile();
    if (band_lo >= chip_extent) {
      break;
    }
    Trunk probe = trunk;
    probe.coordinate = std::min(band_lo + 0.5 * thermal.tile(), chip_extent);
    if (!trunk_is_cool(probe, thermal, threshold)) {
      continue;
    }
    const double dist = std::abs(probe.coordinate - trunk.coordinate);
    if (dist < best_dist) {
      best_dist = dist;
      best = probe.coordinate;
    }
  }
  return best;
}

std::vector<Point> net_medians(const OpticalNetlist& onet) {
  std::vector<Point> out;
  out.reserve(onet.nets.size());
  for (const auto& net : onet.nets) {
    out.push_back(net.median());
  }
  return out;
}

/// Places the trunks of round `r`. When `stop_at` is set, stops as soon as
/// the plan's capacity reaches it. Returns the number of trunks added.
int place_round(TrunkPlan& plan, int r, const std::vector<Point>& medians,
                const ThermalProfile& thermal, const Config& cfg,
                std::optional<long long> stop_at) {
  const bool horizontal = (r % 2) == 0;
  const int slabs = 1 << (r / 2);
  // Slabs cut the trunk direction; the trunk spans its slab.
  const double extent = horizontal ? plan.chip_width : plan.chip_height;
  const double across = horizontal ? plan.chip_height : plan.chip_width;
  int added = 0;
  for (int s = 0; s < slabs; ++s) {
    if (stop_at && plan.capacity() >= *stop_at) {
      break;
    }
    const double lo = extent * s / slabs;
    const double hi = (s + 1 == slabs) ? extent : extent * (s + 1) / slabs;
    std::vector<double> coords;
    for (const Point& m : medians) {
      const double along = horizontal ? m.x : m.y;
      const bool inside = along >= lo && (along < hi || (s + 1 == slabs && along <= hi));
      if (inside) {
        coords.push_back(horizontal ? m.y : m.x);
      }
    }
    if (coords.empty()) {
      continue;
    }
    Trunk trunk;
    trunk.id = static_cast<int>(plan.trunks.size());
    trunk.orientation = horizontal ? Orientation::horizontal : Orientation::vertical;
    trunk.coordinate = lower_median(std::move(coords));
    trunk.lo = lo;
    trunk.hi = hi;
    trunk.capacity = cfg.c_max;
    trunk.round = r;

    const auto coordinate =
      nearest_cool_coordinate(trunk, thermal, cfg.models.temp_threshold, across);
    if (!coordinate) {
      continue;
    }
    trunk.coordinate = *coordinate;
    plan.trunks.push_back(trunk);
    ++added;
  }
  return added;
}

} // namespace

TrunkPlan place_trunks(const OpticalNetlist& onet, const ThermalProfile& thermal,
                       const Config& cfg) {
  if (onet.links.empty()) {
    throw PlacementError("optical netlist has no links to place trunks for");
  }
  TrunkPlan plan;
  plan.chip_width = onet.chip_width;
  plan.chip_height = onet.chip_height;
  plan.c_max = cfg.c_max;
  const auto medians = net_medians(onet);
  const auto need = static_cast<long long>(onet.links.size());
  while (plan.capacity() < need && plan.next_round < kMaxPlacementRounds) {
    place_round(plan, plan.next_round, medians, thermal, cfg, need);
    ++plan.next_round;
  }
  if (plan.trunks.empty()) {
    throw PlacementError("no trunk could be placed clear of thermal blockages");
  }
  if (plan.capacity() < need) {
    throw PlacementError("placed capacity " + std::to_string(plan.capacity()) +
                         " stays below the " + std::to_string(need) + " links");
  }
  return plan;
}

int add_placement_round(TrunkPlan& plan, const OpticalNetlist& onet,
                        const ThermalProfile& thermal, const Config& cfg,
                        std::span<const int> stranded_links) {
  if (stranded_links.empty()) {
    const auto medians = net_medians(onet);
    while (plan.next_round < kMaxPlacementRounds) {
      const int added = place_round(plan, plan.next_round, medians, thermal, cfg, std::nullopt);
      ++plan.next_round;
      if (added > 0) {
        return added;
      }
    }
    return 0;
  }

  // Restart the partition schedule over the stranded links only (each one
  // standing in as a two-pin net), one horizontal/vertical pair of rounds at
  // a time, keeping trunks not already placed.
  std::vector<Point> medians;
  for (int l : stranded_links) {
    const Point ends[] = {onet.links[l].driver, onet.links[l].sink};
    medians.push_back(geometric_median(ends));
  }
  for (int r = 0; r + 1 < kMaxPlacementRounds; r += 2) {
    TrunkPlan probe = plan;
    probe.trunks.clear();
    place_round(probe, r, medians, thermal, cfg, std::nullopt);
    place_round(probe, r + 1, medians, thermal, cfg, std::nullopt);
    int added = 0;
    for (Trunk t : probe.trunks) {
      const bool known = std::any_of(plan.trunks.begin(), plan.trunks.end(), [&](const Trunk& u) {
        return u.orientation == t.orientation && u.coordinate == t.coordinate && u.lo == t.lo &&
               u.hi == t.hi;
      });
      if (known) {
        continue;
      }
      t.id = static_cast<int>(plan.trunks.size());
      t.round = plan.next_round;
      plan.trunks.push_back(t);
      ++added;
    }
    if (added > 0) {
      ++plan.next_round;
      return added;
    }
  }
  return 0;
}

LinkAccess link_access_at(const Link& link, const Trunk& trunk, double mod_axis,
                          double det_axis, const ThermalProfile& thermal,
                          const DeviceModels& models) {
  LinkAccess a;
  a.link_id = link.id;
  a.trunk_id = trunk.id;
  a.mod_pos = trunk.at(mod_axis);
  a.det_pos = trunk.at(det_axis);
  a.wl_e = manhattan(link.driver, a.mod_pos) + manhattan(a.det_pos, link.sink);
  a.wl_o = std::abs(det_axis - mod_axis);
  a.t_var = std::max(thermal.at(a.mod_pos), thermal.at(a.det_pos));

  const double delay = models.tau_e * a.wl_e + models.tau_o * a.wl_o + models.tau_conv;
  a.timing_ok = delay <= models.tau_e * link.hpwl;

  // alpha_wg is per cm, lengths are mm.
  a.p_path = loss_to_power(models.loss_mod_db + models.alpha_wg * a.wl_o / 10.0, models);
  a.detection_ok = models.p_det_sense + a.p_path <= models.p_laser_max;

  const RingPenalty ring = ring_thermal_penalty(a.t_var, models);
  a.p_ring = ring.feasible ? ring.per_link_mw() : 0.0;
  a.thermal_ok = a.t_var <= models.temp_threshold && ring.feasible && a.detection_ok;
  return a;
}

LinkAccess link_access(const Link& link, const Trunk& trunk, const ThermalProfile& thermal,
                       const DeviceModels& models) {
  return link_access_at(link, trunk, trunk.project(link.driver), trunk.project(link.sink),
                        thermal, models);
}

std::vector<Crossing> trunk_crossings(const TrunkPlan& plan) {
  std::vector<const Trunk*> horizontal, vertical;
  for (const auto& t : plan.trunks) {
    (t.horizontal() ? horizontal : vertical).push_back(&t);
  }
  std::vector<Crossing> out;
  for (const Trunk* h : horizontal) {
    for (const Trunk* v : vertical) {
      const bool meets = v->coordinate >= h->lo && v->coordinate <= h->hi &&
                         h->coordinate >= v->lo && h->coordinate <= v->hi;
      if (meets) {
        out.push_back({h->id, v->id});
      }
    }
  }
  return out;
}

} // namespace glow
