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


#include "glow/glow_route.hpp"

#include <chrono>
#include <map>
#include <string>

#include "glow/errors.hpp"

namespace glow {

namespace {

std::string ids(const std::vector<int>& v) {
  std::string s;
  for (int x : v) {
    s += (s.empty() ? "" : ", ") + std::to_string(x);
  }
  return s;
}

} // namespace

std::vector<int> GlowModel::decode(const std::vector<double>& values, int link_count) const {
  std::vector<int> link_trunk(static_cast<size_t>(link_count), kUnassigned);
  for (const Select& s : selects) {
    if (values[s.var] > 0.5) {
      link_trunk[s.link] = s.trunk;
    }
  }
  return link_trunk;
}

GlowModel build_ilp(const TrunkPlan& plan, const OpticalNetlist& onet, const AccessTable& access,
                    const ThermalProfile& thermal, const DeviceModels& models) {
  using ilp::Sense;
  using ilp::Term;
  GlowModel g;
  ilp::Model& m = g.model;
  const int trunks = static_cast<int>(plan.trunks.size());
  const int links = static_cast<int>(onet.links.size());
  const int pin_max = onet.pin_max();
  const int c_max = plan.c_max;

  for (const Trunk& t : plan.trunks) {
    const int v = m.add_binary("W_" + std::to_string(t.id));
    m.set_objective(v, trunk_thermal_power(t, thermal, models) + models.p_trunk_base);
    g.w.push_back(v);
  }
  g.crossings = trunk_crossings(plan);
  for (const Crossing& c : g.crossings) {
    const int v =
      m.add_binary("W_" + std::to_string(c.horizontal) + "_" + std::to_string(c.vertical));
    m.set_objective(v, models.p_cross_unit);
    g.w_cross.push_back(v);
  }

  // (net, trunk) pairs in net-id then trunk order.
  std::map<std::pair<int, int>, int> pair_of;
  for (const OpticalNet& net : onet.nets) {
    for (int t = 0; t < trunks; ++t) {
      bool any = false;
      for (int l : net.links) {
        any = any || access.at(l, t).feasible();
      }
      if (!any) {
        continue;
      }
      const std::string tag = std::to_string(net.net_id) + "_" + std::to_string(t);
      GlowModel::Pair p;
      p.net_id = net.net_id;
      p.trunk = t;
      p.lam = m.add_binary("LAM_" + tag);
      m.set_objective(p.lam, models.p_channel);
      pair_of[{net.net_id, t}] = static_cast<int>(g.pairs.size());
      g.pairs.push_back(p);
    }
  }
  for (GlowModel::Pair& p : g.pairs) {
    p.sum = m.add_variable("SUM_" + std::to_string(p.net_id) + "_" + std::to_string(p.trunk), 0,
                           pin_max, true);
  }

  std::vector<std::vector<int>> s_of_link(static_cast<size_t>(links));
  for (int l = 0; l < links; ++l) {
    for (int t = 0; t < trunks; ++t) {
      const LinkAccess& acc = access.at(l, t);
      if (!acc.feasible()) {
        continue;
      }
      const int v = m.add_binary("S_" + std::to_string(l) + "_" + std::to_string(t));
      m.set_objective(v, acc.p_ring + acc.p_path);
      g.selects.push_back({l, t, v});
      s_of_link[l].push_back(v);
    }
    if (s_of_link[l].empty()) {
      g.unroutable_links.push_back(l);
    }
  }

  for (int l = 0; l < links; ++l) {
    std::vector<Term> row;
    for (int v : s_of_link[l]) {
      row.push_back({v, 1.0});
    }
    m.add_constraint("sel_" + std::to_string(l), std::move(row), Sense::equal, 1.0);
  }

  std::vector<std::vector<int>> lam_on(static_cast<size_t>(trunks));
  for (const GlowModel::Pair& p : g.pairs) {
    lam_on[p.trunk].push_back(p.lam);
  }
  for (int t = 0; t < trunks; ++t) {
    std::vector<Term> row;
    for (int v : lam_on[t]) {
      row.push_back({v, 1.0});
    }
    m.add_constraint("cap_" + std::to_string(t), std::move(row), Sense::less_equal, c_max);
  }

  for (const GlowModel::Pair& p : g.pairs) {
    const std::string tag = std::to_string(p.net_id) + "_" + std::to_string(p.trunk);
    std::vector<Term> row{{p.sum, 1.0}};
    for (const GlowModel::Select& s : g.selects) {
      if (s.trunk == p.trunk && onet.links[s.link].net_id == p.net_id) {
        row.push_back({s.var, -1.0});
      }
    }
    m.add_constraint("sum_" + tag, std::move(row), Sense::equal, 0.0);
    m.add_constraint("lam_lo_" + tag, {{p.lam, 2.0 * pin_max}, {p.sum, -2.0}},
                     Sense::greater_equal, -1.0);
    m.add_constraint("lam_hi_" + tag, {{p.lam, 1.0}, {p.sum, -2.0}}, Sense::less_equal, 0.0);
  }

  for (int t = 0; t < trunks; ++t) {
    std::vector<Term> lo{{g.w[t], 2.0 * c_max}};
    std::vector<Term> hi{{g.w[t], 1.0}};
    for (int v : lam_on[t]) {
      lo.push_back({v, -2.0});
      hi.push_back({v, -2.0});
    }
    m.add_constraint("w_lo_" + std::to_string(t), std::move(lo), Sense::greater_equal, -1.0);
    m.add_constraint("w_hi_" + std::to_string(t), std::move(hi), Sense::less_equal, 0.0);
  }

  // Implied by the rows above for integer points; they tighten the relaxation.
  for (const GlowModel::Select& s : g.selects) {
    const GlowModel::Pair& p = g.pairs[pair_of.at({onet.links[s.link].net_id, s.trunk})];
    m.add_constraint("link_" + std::to_string(s.link) + "_" + std::to_string(s.trunk),
                     {{s.var, 1.0}, {p.lam, -1.0}}, Sense::less_equal, 0.0);
  }
  for (const GlowModel::Pair& p : g.pairs) {
    m.add_constraint("use_" + std::to_string(p.net_id) + "_" + std::to_string(p.trunk),
                     {{p.lam, 1.0}, {g.w[p.trunk], -1.0}}, Sense::less_equal, 0.0);
  }

  for (size_t k = 0; k < g.crossings.size(); ++k) {
    const Crossing& c = g.crossings[k];
    const std::string tag = std::to_string(c.horizontal) + "_" + std::to_string(c.vertical);
    const int wi = g.w[c.horizontal], wj = g.w[c.vertical], wij = g.w_cross[k];
    m.add_constraint("x_lo_" + tag, {{wij, 2.0}, {wi, -1.0}, {wj, -1.0}}, Sense::less_equal, 0.0);
    m.add_constraint("x_hi_" + tag, {{wi, 1.0}, {wj, 1.0}, {wij, -1.0}}, Sense::less_equal, 1.0);
  }
  return g;
}

GlowResult glow_route(TrunkPlan plan, const OpticalNetlist& onet, const ThermalProfile& thermal,
                      const Config& cfg, const GlowOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  GlowResult out;
  int revisions = 0;
  for (;;) {
    AccessTable access = build_access_table(onet, plan, thermal, cfg.models);
    GlowModel g = build_ilp(plan, onet, access, thermal, cfg.models);
    if (opt.on_model) {
      opt.on_model(g);
    }

    std::vector<int> failed = g.unroutable_links;
    if (failed.empty()) {
      ilp::SolveOptions so;
      so.parallel = opt.parallel;
      so.time_limit_s =
        opt.time_limit_s -
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      const ilp::SolveResult sr = ilp::solve(g.model, so);
      if (sr.has_solution) {
        RouteResult& r = out.route;
        r.assignment = Assignment::from_links(g.decode(sr.values, static_cast<int>(onet.links.size())),
                                              onet, static_cast<int>(plan.trunks.size()));
        r.report = compute_power(r.assignment, onet, plan, access, thermal, cfg.models);
        r.plan = std::move(plan);
        r.access = std::move(access);
        r.revisions = revisions;
        out.status = sr.status;
        out.objective = sr.objective;
        out.root_bound = sr.root_bound;
        out.nodes = sr.nodes;
        out.values = sr.values;
        out.model = std::move(g);
        return out;
      }
      if (sr.status == ilp::Status::timeout) {
        throw TimeoutError("solver time limit reached without a feasible assignment");
      }
      for (int l = 0; l < static_cast<int>(onet.links.size()); ++l) {
        failed.push_back(l);
      }
    }
    if (revisions >= cfg.max_placement_revisions ||
        add_placement_round(plan, onet, thermal, cfg, failed) == 0) {
      throw RoutingError(g.unroutable_links.empty()
                           ? "no feasible channel assignment on the revised placement"
                           : "links with no feasible trunk: " + ids(failed),
                         failed);
    }
    ++revisions;
  }
}

} // namespace glow
