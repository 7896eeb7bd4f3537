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


// Result types shared by the routers and the post-routing pass.

#pragma once

#include "glow/access.hpp"
#include "glow/power.hpp"
#include "glow/report.hpp"

namespace glow {

/// A routed instance. `plan` and `access` are the final (possibly revised)
/// placement and its access table; `assignment` is valid against both.
struct RouteResult {
  TrunkPlan plan;
  AccessTable access;
  Assignment assignment;
  PowerReport report;
  int revisions = 0;  // placement rounds added while routing
};

} // namespace glow
