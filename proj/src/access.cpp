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

#include "glow/access.hpp"

#include <omp.h>

namespace glow {

AccessTable build_access_table(const OpticalNetlist& onet, const TrunkPlan& plan,
                               const ThermalProfile& thermal, const DeviceModels& models) {
  const int links = static_cast<int>(onet.links.size());
  const int trunks = static_cast<int>(plan.trunks.size());
  AccessTable table(links, trunks);
  const long long cells = static_cast<long long>(links) * trunks;
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < cells; ++k) {
    const int l = static_cast<int>(k / trunks);
    const int t = static_cast<int>(k % trunks);
    table.at(l, t) = link_access(onet.links[l], plan.trunks[t], thermal, models);
  }
  return table;
}

AccessTable build_access_table_serial(const OpticalNetlist& onet, const TrunkPlan& plan,
                                      const ThermalProfile& thermal, const DeviceModels& models) {
  const int links = static_cast<int>(onet.links.size());
  const int trunks = static_cast<int>(plan.trunks.size());
  AccessTable table(links, trunks);
  for (int l = 0; l < links; ++l) {
    for (int t = 0; t < trunks; ++t) {
      table.at(l, t) = link_access(onet.links[l], plan.trunks[t], thermal, models);
    }
  }
  return table;
}

} // namespace glow
