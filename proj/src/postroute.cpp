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


#include "glow/postroute.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "glow/errors.hpp"

namespace glow {

namespace {

constexpr double kPitchTol = 1e-9;

double axis_of(const Trunk& t, const Point& p) { return t.horizontal() ? p.x : p.y; }

std::vector<Converter> converters_on(const std::vector<int>& link_trunk, const AccessTable& access,
                                     const OpticalNetlist& onet, const Trunk& trunk) {
  std::vector<Converter> out;
  std::map<std::pair<int, double>, size_t> shared_mod;  // (net, axis) -> index
  for (size_t l = 0; l < link_trunk.size(); ++l) {
    if (link_trunk[l] != trunk.id) {
      continue;
    }
    const int link = static_cast<int>(l);
    const LinkAccess& acc = access.at(link, trunk.id);
    const double mod = axis_of(trunk, acc.mod_pos);
    const auto key = std::make_pair(onet.links[l].net_id, mod);
    if (auto it = shared_mod.find(key); it != shared_mod.end()) {
      out[it->second].links.push_back(link);
    } else {
      shared_mod[key] = out.size();
      out.push_back({trunk.id, mod, true, {link}});
    }
    out.push_back({trunk.id, axis_of(trunk, acc.det_pos), false, {link}});
  }
  std::stable_sort(out.begin(), out.end(), [](const Converter& a, const Converter& b) {
    if (a.axis != b.axis) {
      return a.axis < b.axis;
    }
    if (a.modulator != b.modulator) {
      return a.modulator;
    }
    return a.links.front() < b.links.front();
  });
  return out;
}

bool clear_of(double pos, const std::vector<double>& placed, double pitch) {
  for (double q : placed) {
    if (std::abs(pos - q) < pitch - kPitchTol) {
      return false;
    }
  }
  return true;
}

} // namespace

std::vector<Converter> trunk_converters(const Assignment& a, const AccessTable& access,
                                        const OpticalNetlist& onet, const Trunk& trunk) {
  return converters_on(a.link_trunk, access, onet, trunk);
}

RouteResult legalize(const RouteResult& routed, const OpticalNetlist& onet,
                     const ThermalProfile& thermal, const Config& cfg) {
  const TrunkPlan& plan = routed.plan;
  const double pitch = cfg.min_ring_pitch;
  std::vector<int> link_trunk = routed.assignment.link_trunk;
  AccessTable access = routed.access;
  std::vector<std::set<int>> tried(link_trunk.size());
  for (size_t l = 0; l < link_trunk.size(); ++l) {
    if (link_trunk[l] != kUnassigned) {
      tried[l].insert(link_trunk[l]);
    }
  }

  auto nets_on = [&](int t) {
    std::set<int> nets;
    for (size_t l = 0; l < link_trunk.size(); ++l) {
      if (link_trunk[l] == t) {
        nets.insert(onet.links[l].net_id);
      }
    }
    return nets;
  };

  std::set<int> dirty;
  for (const Trunk& t : plan.trunks) {
    dirty.insert(t.id);
  }
  while (!dirty.empty()) {
    const Trunk& trunk = plan.trunks[*dirty.begin()];
    dirty.erase(dirty.begin());
    const std::vector<Converter> convs = converters_on(link_trunk, access, onet, trunk);
    std::vector<double> placed;
    const int reach = static_cast<int>(std::ceil(trunk.length() / pitch)) + 1;

    for (const Converter& c : convs) {
      if (clear_of(c.axis, placed, pitch)) {
        placed.push_back(c.axis);
        continue;
      }
      bool moved = false;
      for (int k = 1; k <= reach && !moved; ++k) {
        for (int sign : {+1, -1}) {
          const double pos = c.axis + sign * k * pitch;
          if (pos < trunk.lo - kPitchTol || pos > trunk.hi + kPitchTol ||
              !clear_of(pos, placed, pitch)) {
            continue;
          }
          const double at = std::clamp(pos, trunk.lo, trunk.hi);
          std::vector<LinkAccess> next;
          bool ok = true;
          for (int l : c.links) {
            const LinkAccess& cur = access.at(l, trunk.id);
            const double mod = c.modulator ? at : axis_of(trunk, cur.mod_pos);
            const double det = c.modulator ? axis_of(trunk, cur.det_pos) : at;
            next.push_back(link_access_at(onet.links[l], trunk, mod, det, thermal, cfg.models));
            ok = ok && next.back().feasible();
          }
          if (!ok) {
            continue;
          }
          for (size_t i = 0; i < c.links.size(); ++i) {
            access.at(c.links[i], trunk.id) = next[i];
          }
          placed.push_back(at);
          moved = true;
          break;
        }
      }
      if (moved) {
        continue;
      }

      // No legal offset: move the converter's links elsewhere.
      for (int l : c.links) {
        const int net = onet.links[l].net_id;
        int best = -1;
        double best_cost = 0.0;
        for (const Trunk& u : plan.trunks) {
          if (tried[l].count(u.id)) {
            continue;
          }
          const LinkAccess& acc = access.at(l, u.id);
          if (!acc.feasible()) {
            continue;
          }
          const std::set<int> nets = nets_on(u.id);
          if (!nets.count(net) && static_cast<int>(nets.size()) >= plan.c_max) {
            continue;
          }
          const double cost = acc.p_ring + acc.p_path;
          if (best < 0 || cost < best_cost) {
            best = u.id;
            best_cost = cost;
          }
        }
        if (best < 0) {
          throw LegalizationError("link " + std::to_string(l) +
                                    " cannot be legalized on any trunk with free capacity",
                                  {l});
        }
        access.at(l, trunk.id) = routed.access.at(l, trunk.id);
        link_trunk[l] = best;
        tried[l].insert(best);
        dirty.insert(best);
      }
      dirty.insert(trunk.id);
      break;
    }
  }

  RouteResult out;
  out.plan = plan;
  out.revisions = routed.revisions;
  out.assignment =
    Assignment::from_links(std::move(link_trunk), onet, static_cast<int>(plan.trunks.size()));
  out.report = compute_power(out.assignment, onet, plan, access, thermal, cfg.models);
  out.access = std::move(access);
  return out;
}

} // namespace glow
