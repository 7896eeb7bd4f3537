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


// Greedy thermal-ordered channel assignment (the baseline router).

#pragma once

#include "glow/route.hpp"

namespace glow {

/// Walks trunks in creation order, filling each with the coolest feasible
/// unassigned links until a new net would exceed c_max. Adds a placement
/// round and repeats while links remain, up to cfg.max_placement_revisions.
/// Throws RoutingError naming the stranded links.
RouteResult cat_route(TrunkPlan plan, const OpticalNetlist& onet, const ThermalProfile& thermal,
                      const Config& cfg);

/// One greedy pass over an existing plan and access table. Links already
/// routed in `link_trunk` stay put. Returns the number of links placed.
int cat_pass(const TrunkPlan& plan, const OpticalNetlist& onet, const AccessTable& access,
             std::vector<int>& link_trunk);

} // namespace glow
