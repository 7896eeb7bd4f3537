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


// Hand-built plans and routes for the unit tests.

#pragma once

#include <vector>

#include "glow/access.hpp"
#include "glow/power.hpp"
#include "glow/route.hpp"

namespace glow::testing {

inline Trunk make_trunk(int id, Orientation o, double coordinate, double lo, double hi,
                        int capacity = 32) {
  Trunk t;
  t.id = id;
  t.orientation = o;
  t.coordinate = coordinate;
  t.lo = lo;
  t.hi = hi;
  t.capacity = capacity;
  return t;
}

/// Plan over a 20 x 20 chip that placement may not extend.
inline TrunkPlan make_plan(std::vector<Trunk> trunks, int c_max = 32) {
  TrunkPlan p;
  p.chip_width = p.chip_height = 20.0;
  p.c_max = c_max;
  p.trunks = std::move(trunks);
  p.next_round = kMaxPlacementRounds;
  return p;
}

/// Two-pin nets on a 20 x 20 chip, driver first.
inline Netlist two_pin_nets(const std::vector<std::pair<Point, Point>>& links) {
  Netlist n;
  n.chip_width = n.chip_height = 20.0;
  for (size_t i = 0; i < links.size(); ++i) {
    n.nets.push_back({static_cast<int>(i), 0, {links[i].first, links[i].second}});
  }
  return n;
}

inline RouteResult make_route(const TrunkPlan& plan, const OpticalNetlist& onet,
                              const ThermalProfile& thermal, const DeviceModels& models,
                              std::vector<int> link_trunk) {
  RouteResult r;
  r.plan = plan;
  r.access = build_access_table(onet, plan, thermal, models);
  r.assignment = Assignment::from_links(std::move(link_trunk), onet,
                                        static_cast<int>(plan.trunks.size()));
  r.report = compute_power(r.assignment, onet, plan, r.access, thermal, models);
  return r;
}

} // namespace glow::testing
