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

// Laser power accounting shared by both routers and the report writer.

#pragma once

#include <vector>

#include "glow/access.hpp"
#include "glow/report.hpp"

namespace glow {

inline constexpr int kUnassigned = -1;

/// A wavelength slot: net `net_id` occupies channel `channel` of `trunk`.
struct NetChannel {
  int net_id = 0;
  int trunk = 0;
  int channel = 0;

  friend bool operator==(const NetChannel&, const NetChannel&) = default;
};

/// Link -> trunk routing with the derived net and trunk activity flags.
struct Assignment {
  std::vector<int> link_trunk;      // per link id; kUnassigned when unrouted
  std::vector<NetChannel> channels; // active (net, trunk) pairs, by trunk then channel
  std::vector<bool> trunk_active;   // per trunk id

  /// Derives channels (handed out per trunk in ascending net id) and trunk
  /// flags from a link -> trunk map.
  static Assignment from_links(std::vector<int> link_trunk, const OpticalNetlist& onet,
                               int trunk_count);

  int channel_of(int net_id, int trunk) const;
  int active_trunk_count() const;
  int assigned_link_count() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Throws InvariantError when flags, capacity or channel numbering disagree
/// with the link routing.
void check_assignment(const Assignment& a, const OpticalNetlist& onet, const TrunkPlan& plan);

/// k_trunk_thm times the |delta T| integral along the trunk.
double trunk_thermal_power(const Trunk& trunk, const ThermalProfile& thermal,
                           const DeviceModels& models);

/// Full power breakdown of an assignment. Validates it first.
PowerReport compute_power(const Assignment& a, const OpticalNetlist& onet, const TrunkPlan& plan,
                          const AccessTable& access, const ThermalProfile& thermal,
                          const DeviceModels& models);

} // namespace glow
