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


// Constraint checker written against the model definitions directly; it
// recomputes geometry, delay, thermal and laser budgets from positions
// instead of trusting the router's access flags.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glow/glow_route.hpp"
#include "glow/route.hpp"

namespace glow::testing {

struct Violations {
  std::vector<std::string> items;
  bool ok() const { return items.empty(); }
  void add(std::string s) { items.push_back(std::move(s)); }
};

inline double tile_value(const ThermalProfile& th, double x, double y) {
  const int c = std::clamp(static_cast<int>(std::floor(x / th.tile())), 0, th.cols() - 1);
  const int r = std::clamp(static_cast<int>(std::floor(y / th.tile())), 0, th.rows() - 1);
  return th.values()[static_cast<size_t>(r) * th.cols() + c];
}

inline Violations check_route(const RouteResult& r, const OpticalNetlist& onet,
                              const ThermalProfile& th, const Config& cfg, bool check_pitch) {
  Violations v;
  const DeviceModels& m = cfg.models;
  const auto& lt = r.assignment.link_trunk;
  const int trunks = static_cast<int>(r.plan.trunks.size());
  if (lt.size() != onet.links.size()) {
    v.add("assignment size");
    return v;
  }
  std::map<int, std::set<int>> nets_on;
  for (size_t l = 0; l < lt.size(); ++l) {
    const std::string tag = "link " + std::to_string(l) + ": ";
    if (lt[l] < 0 || lt[l] >= trunks) {
      v.add(tag + "selection (not on exactly one trunk)");
      continue;
    }
    const Trunk& t = r.plan.trunks[lt[l]];
    const Link& link = onet.links[l];
    nets_on[t.id].insert(link.net_id);
    const LinkAccess& acc = r.access.at(static_cast<int>(l), t.id);
    for (const Point& p : {acc.mod_pos, acc.det_pos}) {
      const double along = t.horizontal() ? p.x : p.y;
      const double across = t.horizontal() ? p.y : p.x;
      if (std::abs(across - t.coordinate) > 1e-9 || along < t.lo - 1e-9 || along > t.hi + 1e-9) {
        v.add(tag + "converter off its trunk");
      }
    }
    const double wl_e = std::abs(link.driver.x - acc.mod_pos.x) +
                        std::abs(link.driver.y - acc.mod_pos.y) +
                        std::abs(link.sink.x - acc.det_pos.x) + std::abs(link.sink.y - acc.det_pos.y);
    const double wl_o = std::abs(acc.mod_pos.x - acc.det_pos.x) + std::abs(acc.mod_pos.y - acc.det_pos.y);
    const double hpwl = std::abs(link.driver.x - link.sink.x) + std::abs(link.driver.y - link.sink.y);
    if (m.tau_e * wl_e + m.tau_o * wl_o + m.tau_conv > m.tau_e * hpwl + 1e-9) {
      v.add(tag + "timing");
    }
    const double tv = std::max(tile_value(th, acc.mod_pos.x, acc.mod_pos.y),
                               tile_value(th, acc.det_pos.x, acc.det_pos.y));
    if (tv > m.temp_threshold || 2.0 * m.drift_sens * tv > m.channel_spacing) {
      v.add(tag + "thermal");
    }
    const double loss = m.loss_mod_db + m.alpha_wg * wl_o / 10.0;
    const double laser = m.p_det_sense * std::pow(10.0, loss / 10.0);
    if (laser > m.p_laser_max + 1e-12) {
      v.add(tag + "detection budget");
    }
  }

  std::set<std::pair<int, int>> declared;
  std::map<int, std::set<int>> used_channels;
  for (const NetChannel& c : r.assignment.channels) {
    declared.insert({c.net_id, c.trunk});
    if (c.channel < 0 || c.channel >= cfg.c_max || !used_channels[c.trunk].insert(c.channel).second) {
      v.add("trunk " + std::to_string(c.trunk) + ": channel numbering");
    }
  }
  std::set<std::pair<int, int>> expected;
  for (const auto& [t, nets] : nets_on) {
    if (static_cast<int>(nets.size()) > cfg.c_max) {
      v.add("trunk " + std::to_string(t) + ": capacity");
    }
    for (int n : nets) {
      expected.insert({n, t});
    }
  }
  if (declared != expected) {
    v.add("net activity differs from [links on trunk > 0]");
  }
  for (int t = 0; t < trunks; ++t) {
    const bool any = nets_on.count(t) > 0;
    if (static_cast<int>(r.assignment.trunk_active.size()) != trunks ||
        r.assignment.trunk_active[t] != any) {
      v.add("trunk " + std::to_string(t) + ": activity differs from [nets on trunk > 0]");
    }
  }

  if (check_pitch) {
    for (const Trunk& t : r.plan.trunks) {
      // Converter positions; a net's modulators at one spot are one device.
      std::set<std::pair<int, double>> mods;
      std::vector<double> pos;
      for (size_t l = 0; l < lt.size(); ++l) {
        if (lt[l] != t.id) {
          continue;
        }
        const LinkAccess& acc = r.access.at(static_cast<int>(l), t.id);
        const double mod = t.horizontal() ? acc.mod_pos.x : acc.mod_pos.y;
        if (mods.insert({onet.links[l].net_id, mod}).second) {
          pos.push_back(mod);
        }
        pos.push_back(t.horizontal() ? acc.det_pos.x : acc.det_pos.y);
      }
      std::sort(pos.begin(), pos.end());
      for (size_t i = 1; i < pos.size(); ++i) {
        if (pos[i] - pos[i - 1] < cfg.min_ring_pitch - 1e-9) {
          v.add("trunk " + std::to_string(t.id) + ": converters closer than the ring pitch");
          break;
        }
      }
    }
  }
  return v;
}

/// The logical identities the linearised rows must enforce, read straight
/// off an integer solution of the model.
inline Violations check_glow_values(const GlowModel& g, const std::vector<double>& x,
                                    const OpticalNetlist& onet) {
  Violations v;
  auto bit = [&](int var) { return x[var] > 0.5; };
  std::map<int, int> per_link;
  std::map<std::pair<int, int>, int> count;
  for (const auto& s : g.selects) {
    if (bit(s.var)) {
      ++per_link[s.link];
      ++count[{onet.links[s.link].net_id, s.trunk}];
    }
  }
  for (size_t l = 0; l < onet.links.size(); ++l) {
    if (per_link[static_cast<int>(l)] != 1) {
      v.add("link " + std::to_string(l) + " selected " + std::to_string(per_link[static_cast<int>(l)]) + " times");
    }
  }
  std::map<int, int> lam_on;
  for (const auto& p : g.pairs) {
    const int c = count[{p.net_id, p.trunk}];
    if (std::lround(x[p.sum]) != c) {
      v.add("SUM differs from the selected link count");
    }
    if (bit(p.lam) != (c > 0)) {
      v.add("LAM differs from [SUM > 0]");
    }
    lam_on[p.trunk] += bit(p.lam);
  }
  for (size_t t = 0; t < g.w.size(); ++t) {
    if (bit(g.w[t]) != (lam_on[static_cast<int>(t)] > 0)) {
      v.add("W differs from [sum LAM > 0]");
    }
  }
  for (size_t k = 0; k < g.crossings.size(); ++k) {
    const bool both = bit(g.w[g.crossings[k].horizontal]) && bit(g.w[g.crossings[k].vertical]);
    if (bit(g.w_cross[k]) != both) {
      v.add("W_ij differs from W_i AND W_j");
    }
  }
  return v;
}

} // namespace glow::testing
