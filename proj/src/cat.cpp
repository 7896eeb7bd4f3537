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


#include "glow/cat.hpp"

#include <algorithm>
#include <set>

#include "glow/errors.hpp"

namespace glow {

int cat_pass(const TrunkPlan& plan, const OpticalNetlist& onet, const AccessTable& access,
             std::vector<int>& link_trunk) {
  int placed = 0;
  for (const Trunk& trunk : plan.trunks) {
    std::set<int> nets;
    for (size_t l = 0; l < link_trunk.size(); ++l) {
      if (link_trunk[l] == trunk.id) {
        nets.insert(onet.links[l].net_id);
      }
    }
    std::vector<int> candidates;
    for (size_t l = 0; l < link_trunk.size(); ++l) {
      if (link_trunk[l] == kUnassigned && access.at(static_cast<int>(l), trunk.id).feasible()) {
        candidates.push_back(static_cast<int>(l));
      }
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      const double ta = access.at(a, trunk.id).t_var;
      const double tb = access.at(b, trunk.id).t_var;
      return ta != tb ? ta < tb : a < b;
    });
    for (int l : candidates) {
      const int net = onet.links[l].net_id;
      if (!nets.count(net)) {
        if (static_cast<int>(nets.size()) >= plan.c_max) {
          break;
        }
        nets.insert(net);
      }
      link_trunk[l] = trunk.id;
      ++placed;
    }
  }
  return placed;
}

RouteResult cat_route(TrunkPlan plan, const OpticalNetlist& onet, const ThermalProfile& thermal,
                      const Config& cfg) {
  RouteResult r;
  std::vector<int> link_trunk(onet.links.size(), kUnassigned);
  AccessTable access = build_access_table(onet, plan, thermal, cfg.models);
  for (;;) {
    cat_pass(plan, onet, access, link_trunk);
    std::vector<int> open;
    for (size_t l = 0; l < link_trunk.size(); ++l) {
      if (link_trunk[l] == kUnassigned) {
        open.push_back(static_cast<int>(l));
      }
    }
    if (open.empty() || r.revisions >= cfg.max_placement_revisions ||
        add_placement_round(plan, onet, thermal, cfg, open) == 0) {
      break;
    }
    ++r.revisions;
    access = build_access_table(onet, plan, thermal, cfg.models);
  }

  std::vector<int> stranded;
  for (size_t l = 0; l < link_trunk.size(); ++l) {
    if (link_trunk[l] == kUnassigned) {
      stranded.push_back(static_cast<int>(l));
    }
  }
  if (!stranded.empty()) {
    std::string names;
    for (int l : stranded) {
      names += (names.empty() ? "" : ", ") + std::to_string(l);
    }
    throw RoutingError("greedy assignment left links unrouted: " + names, stranded);
  }

  r.assignment = Assignment::from_links(std::move(link_trunk), onet,
                                        static_cast<int>(plan.trunks.size()));
  r.report = compute_power(r.assignment, onet, plan, access, thermal, cfg.models);
  r.plan = std::move(plan);
  r.access = std::move(access);
  return r;
}

} // namespace glow
