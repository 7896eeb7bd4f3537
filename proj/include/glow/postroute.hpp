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


// Post-routing legalization of converter spacing along trunks.

#pragma once

#include <vector>

#include "glow/route.hpp"

namespace glow {

/// One converter on a trunk: a modulator (shared by every link of one net
/// that projects to the same spot) or a detector.
struct Converter {
  int trunk = 0;
  double axis = 0.0;
  bool modulator = true;
  std::vector<int> links;
};

/// Converters of the links routed on `trunk`, sorted by axis position.
std::vector<Converter> trunk_converters(const Assignment& a, const AccessTable& access,
                                        const OpticalNetlist& onet, const Trunk& trunk);

/// Nudges converters closer than cfg.min_ring_pitch apart along their
/// trunk, keeping each link feasible, and reroutes links that cannot be
/// nudged to their next-cheapest trunk with room. Returns the updated
/// routing with its report. Throws LegalizationError naming a link that has
/// nowhere to go.
RouteResult legalize(const RouteResult& routed, const OpticalNetlist& onet,
                     const ThermalProfile& thermal, const Config& cfg);

} // namespace glow
