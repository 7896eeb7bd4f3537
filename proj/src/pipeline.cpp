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


#include "glow/pipeline.hpp"

#include <stdexcept>

#include "glow/cat.hpp"
#include "glow/postroute.hpp"

namespace glow {

PipelineResult run_pipeline(const Netlist& netlist, const ThermalProfile& thermal,
                            const Config& cfg, const PipelineOptions& opt) {
  cfg.validate();
  if (!thermal.covers(netlist.chip_width, netlist.chip_height)) {
    throw std::invalid_argument("thermal grid does not cover the chip");
  }
  PipelineResult r;
  r.pre = build_optical_netlist(netlist, critical_length(cfg.models));
  const OpticalNetlist& onet = r.pre.optical;
  if (onet.links.empty()) {
    r.routed.plan.chip_width = onet.chip_width;
    r.routed.plan.chip_height = onet.chip_height;
    r.routed.plan.c_max = cfg.c_max;
    r.legal = r.routed;
    return r;
  }
  TrunkPlan plan = place_trunks(onet, thermal, cfg);
  if (opt.algo == Algorithm::cat) {
    r.routed = cat_route(std::move(plan), onet, thermal, cfg);
  } else {
    GlowOptions go;
    go.time_limit_s = opt.time_limit_s;
    go.parallel = opt.parallel;
    go.on_model = opt.on_model;
    GlowResult g = glow_route(std::move(plan), onet, thermal, cfg, go);
    r.status = g.status;
    r.routed = std::move(g.route);
  }
  r.legal = legalize(r.routed, onet, thermal, cfg);
  return r;
}

} // namespace glow
