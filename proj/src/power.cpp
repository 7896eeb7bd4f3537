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

#include "glow/power.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "glow/errors.hpp"

namespace glow {

Assignment Assignment::from_links(std::vector<int> link_trunk, const OpticalNetlist& onet,
                                  int trunk_count) {
  Assignment a;
  a.link_trunk = std::move(link_trunk);
  a.trunk_active.assign(static_cast<size_t>(trunk_count), false);
  std::vector<std::set<int>> nets_on(static_cast<size_t>(trunk_count));
  for (size_t l = 0; l < a.link_trunk.size(); ++l) {
    const int t = a.link_trunk[l];
    if (t == kUnassigned) {
      continue;
    }
    if (t < 0 || t >= trunk_count) {
      throw InvariantError("link " + std::to_string(l) + " routed to unknown trunk " +
                           std::to_string(t));
    }
    nets_on[t].insert(onet.links[l].net_id);
  }
  for (int t = 0; t < trunk_count; ++t) {
    int ch = 0;
    for (int net : nets_on[t]) {
      a.channels.push_back({net, t, ch++});
    }
    a.trunk_active[t] = ch > 0;
  }
  return a;
}

int Assignment::channel_of(int net_id, int trunk) const {
  for (const auto& c : channels) {
    if (c.net_id == net_id && c.trunk == trunk) {
      return c.channel;
    }
  }
  return -1;
}

int Assignment::active_trunk_count() const {
  return static_cast<int>(std::count(trunk_active.begin(), trunk_active.end(), true));
}

int Assignment::assigned_link_count() const {
  return static_cast<int>(
    std::count_if(link_trunk.begin(), link_trunk.end(), [](int t) { return t != kUnassigned; }));
}

void check_assignment(const Assignment& a, const OpticalNetlist& onet, const TrunkPlan& plan) {
  const int trunks = static_cast<int>(plan.trunks.size());
  if (a.link_trunk.size() != onet.links.size()) {
    throw InvariantError("assignment covers " + std::to_string(a.link_trunk.size()) +
                         " links, netlist has " + std::to_string(onet.links.size()));
  }
  if (a.trunk_active.size() != plan.trunks.size()) {
    throw InvariantError("trunk flag count does not match the plan");
  }
  std::set<std::pair<int, int>> used;  // (net, trunk) pairs carrying a link
  for (size_t l = 0; l < a.link_trunk.size(); ++l) {
    const int t = a.link_trunk[l];
    if (t == kUnassigned) {
      continue;
    }
    if (t < 0 || t >= trunks) {
      throw InvariantError("link " + std::to_string(l) + " on unknown trunk");
    }
    used.insert({onet.links[l].net_id, t});
  }
  std::set<std::pair<int, int>> declared;
  std::map<int, std::set<int>> channels_on;
  for (const auto& c : a.channels) {
    if (c.trunk < 0 || c.trunk >= trunks) {
      throw InvariantError("channel on unknown trunk");
    }
    if (!declared.insert({c.net_id, c.trunk}).second) {
      throw InvariantError("net " + std::to_string(c.net_id) + " holds two channels on trunk " +
                           std::to_string(c.trunk));
    }
    if (c.channel < 0 || c.channel >= plan.c_max) {
      throw InvariantError("channel index outside [0, c_max)");
    }
    if (!channels_on[c.trunk].insert(c.channel).second) {
      throw InvariantError("channel " + std::to_string(c.channel) + " reused on trunk " +
                           std::to_string(c.trunk));
    }
  }
  if (declared != used) {
    throw InvariantError("net activity flags disagree with the link routing");
  }
  for (int t = 0; t < trunks; ++t) {
    const auto it = channels_on.find(t);
    const size_t n = it == channels_on.end() ? 0 : it->second.size();
    if (n > static_cast<size_t>(plan.c_max)) {
      throw InvariantError("trunk " + std::to_string(t) + " exceeds its channel capacity");
    }
    if (a.trunk_active[t] != (n > 0)) {
      throw InvariantError("trunk " + std::to_string(t) + " activity flag is inconsistent");
    }
  }
}

double trunk_thermal_power(const Trunk& trunk, const ThermalProfile& thermal,
                           const DeviceModels& models) {
  return models.k_trunk_thm * thermal.integral_along(trunk.start(), trunk.end());
}

PowerReport compute_power(const Assignment& a, const OpticalNetlist& onet, const TrunkPlan& plan,
                          const AccessTable& access, const ThermalProfile& thermal,
                          const DeviceModels& models) {
  check_assignment(a, onet, plan);
  PowerReport r;
  for (const Crossing& c : trunk_crossings(plan)) {
    if (a.trunk_active[c.horizontal] && a.trunk_active[c.vertical]) {
      r.p_cross += models.p_cross_unit;
    }
  }
  int active = 0;
  for (const Trunk& t : plan.trunks) {
    if (!a.trunk_active[t.id]) {
      continue;
    }
    ++active;
    r.p_trunk_thm += trunk_thermal_power(t, thermal, models);
    r.total_trunk_length_mm += t.length();
  }
  for (size_t l = 0; l < a.link_trunk.size(); ++l) {
    const int t = a.link_trunk[l];
    if (t == kUnassigned) {
      continue;
    }
    const LinkAccess& acc = access.at(static_cast<int>(l), t);
    r.p_ring_thm += acc.p_ring;
    r.p_path += acc.p_path;
  }
  const int channels = static_cast<int>(a.channels.size());
  r.p_dynamic = channels * models.p_channel + active * models.p_trunk_base;
  r.p_total = PowerReport::sum_parts(r.p_cross, r.p_trunk_thm, r.p_ring_thm, r.p_path, r.p_dynamic);
  r.trunk_count = active;
  r.channel_count = channels;
  r.avg_channels_per_trunk = active > 0 ? static_cast<double>(channels) / active : 0.0;
  return r;
}

} // namespace glow
