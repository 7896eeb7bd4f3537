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


// End-to-end flow: pre-routing, global routing, post-routing.

#pragma once

#include <functional>

#include "glow/glow_route.hpp"
#include "glow/preprocess.hpp"
#include "glow/route.hpp"

namespace glow {

enum class Algorithm { cat, glow };

struct PipelineOptions {
  Algorithm algo = Algorithm::glow;
  double time_limit_s = 3600.0;
  bool parallel = true;
  std::function<void(const GlowModel&)> on_model;
};

struct PipelineResult {
  PreprocessResult pre;
  RouteResult routed;  // straight from the router
  RouteResult legal;   // after legalization; this is what gets reported
  ilp::Status status = ilp::Status::optimal;
};

/// Runs clustering, placement, routing and legalization. A netlist with no
/// optical links yields an empty plan and an all-zero report. Throws
/// std::invalid_argument when the thermal grid does not cover the chip.
PipelineResult run_pipeline(const Netlist& netlist, const ThermalProfile& thermal,
                            const Config& cfg, const PipelineOptions& opt = {});

} // namespace glow
