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

namespace glow {

/// Laser power breakdown (mW) and trunk utilisation of one routed solution.
struct PowerReport {
  double p_cross = 0.0;
  double p_trunk_thm = 0.0;
  double p_ring_thm = 0.0;
  double p_path = 0.0;
  double p_dynamic = 0.0;
  double p_total = 0.0;

  int trunk_count = 0;
  int channel_count = 0;
  double avg_channels_per_trunk = 0.0;
  double total_trunk_length_mm = 0.0;

  /// Loss terms plus dynamic power, summed in a fixed order.
  static double sum_parts(double cross, double trunk_thm, double ring_thm, double path,
                          double dynamic) {
    return cross + trunk_thm + ring_thm + path + dynamic;
  }

  friend bool operator==(const PowerReport&, const PowerReport&) = default;
};

} // namespace glow
