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


// Power-optimal channel assignment through an integer program.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "glow/ilp.hpp"
#include "glow/route.hpp"

namespace glow {

/// The integer program for one plan, with the variable indices needed to
/// decode a solution. Variables are laid out W, W_ij, LAM, SUM, S.
struct GlowModel {
  ilp::Model model;
  std::vector<int> w;                  // per trunk
  std::vector<Crossing> crossings;     // with w_cross[k] for crossings[k]
  std::vector<int> w_cross;
  struct Pair {
    int net_id = 0;
    int trunk = 0;
    int lam = 0;
    int sum = 0;
  };
  std::vector<Pair> pairs;             // (net, trunk) with a feasible link
  struct Select {
    int link = 0;
    int trunk = 0;
    int var = 0;
  };
  std::vector<Select> selects;
  std::vector<int> unroutable_links;   // links with no feasible trunk

  /// Link -> trunk map from a solution vector.
  std::vector<int> decode(const std::vector<double>& values, int link_count) const;
};

GlowModel build_ilp(const TrunkPlan& plan, const OpticalNetlist& onet, const AccessTable& access,
                    const ThermalProfile& thermal, const DeviceModels& models);

struct GlowOptions {
  double time_limit_s = 3600.0;  // per solve
  bool parallel = true;
  /// Called with every model before it is solved (e.g. to export it).
  std::function<void(const GlowModel&)> on_model;
};

struct GlowResult {
  RouteResult route;
  ilp::Status status = ilp::Status::optimal;  // timeout: route holds the incumbent
  double objective = 0.0;
  double root_bound = 0.0;
  long long nodes = 0;
  GlowModel model;             // the model that was solved last
  std::vector<double> values;  // its solution
};

/// Builds and solves; on infeasibility adds a placement round and retries,
/// up to cfg.max_placement_revisions. Throws RoutingError when it runs out of
/// revisions and TimeoutError when the limit passes with no incumbent.
GlowResult glow_route(TrunkPlan plan, const OpticalNetlist& onet, const ThermalProfile& thermal,
                      const Config& cfg, const GlowOptions& opt = {});

} // namespace glow
