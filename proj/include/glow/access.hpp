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

#pragma once

#include <vector>

#include "glow/placement.hpp"

namespace glow {

/// Dense link x trunk table of LinkAccess records.
class AccessTable {
public:
  AccessTable() = default;
  AccessTable(int links, int trunks)
    : links_(links), trunks_(trunks), cells_(static_cast<size_t>(links) * trunks) {}

  int links() const { return links_; }
  int trunks() const { return trunks_; }

  const LinkAccess& at(int link, int trunk) const { return cells_[index(link, trunk)]; }
  LinkAccess& at(int link, int trunk) { return cells_[index(link, trunk)]; }

  friend bool operator==(const AccessTable&, const AccessTable&) = default;

private:
  size_t index(int link, int trunk) const {
    return static_cast<size_t>(link) * trunks_ + trunk;
  }

  int links_ = 0;
  int trunks_ = 0;
  std::vector<LinkAccess> cells_;
};

/// Evaluates link_access for every (link, trunk) pair across OpenMP threads.
AccessTable build_access_table(const OpticalNetlist& onet, const TrunkPlan& plan,
                               const ThermalProfile& thermal, const DeviceModels& models);

/// Single-threaded reference; identical output.
AccessTable build_access_table_serial(const OpticalNetlist& onet, const TrunkPlan& plan,
                                      const ThermalProfile& thermal, const DeviceModels& models);

} // namespace glow
