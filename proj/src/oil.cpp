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

#include "glow/oil.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "glow/errors.hpp"

namespace glow {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw ModelError(what);
  }
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

} // namespace

void DeviceModels::validate() const {
  require(std::isfinite(tau_o) && std::isfinite(tau_e) && std::isfinite(tau_conv),
          "delays must be finite");
  require(tau_o > 0.0, "tau_o must be positive");
  require(tau_e > tau_o, "tau_e must exceed tau_o");
  require(tau_conv >= 0.0, "tau_conv must be non-negative");
  require(finite_nonneg(alpha_wg) && finite_nonneg(loss_mod_db), "losses must be >= 0");
  require(finite_nonneg(p_det_sense) && finite_nonneg(p_channel) &&
            finite_nonneg(p_trunk_base) && finite_nonneg(p_cross_unit) &&
            finite_nonneg(p_laser_max),
          "powers must be >= 0");
  require(finite_nonneg(k_trunk_thm) && finite_nonneg(k_ring_thm),
          "thermal coefficients must be >= 0");
  require(std::isfinite(lambda0) && lambda0 > 0.0, "lambda0 must be positive");
  require(finite_nonneg(drift_sens), "drift_sens must be >= 0");
  require(std::isfinite(channel_spacing) && channel_spacing > 0.0,
          "channel_spacing must be positive");
  require(std::isfinite(q_nominal) && q_nominal > 0.0, "q_nominal must be positive");
  require(finite_nonneg(temp_threshold), "temp_threshold must be >= 0");
}

double critical_length(const DeviceModels& models) {
  const double gain = models.tau_e - models.tau_o;
  if (!std::isfinite(models.tau_conv) || !std::isfinite(gain) || !(gain > 0.0)) {
    throw ModelError("critical length undefined: need finite tau_e > tau_o");
  }
  return models.tau_conv / gain;
}

double ring_q_factor(const RingGeometry& g, double lambda0) {
  const double rra = g.r1 * g.r2 * g.a;
  if (!(rra < 1.0)) {
    throw ModelError("ring Q diverges: r1*r2*a must be < 1");
  }
  if (!(rra > 0.0) || !(g.circumference > 0.0) || !(g.n_g > 0.0) || !(lambda0 > 0.0)) {
    throw ModelError("ring geometry out of domain");
  }
  return std::sqrt(rra) * g.circumference * std::numbers::pi * g.n_g / ((1.0 - rra) * lambda0);
}

double group_index(const std::function<double(double)>& n_e_at, double lambda, double rel_step) {
  const double h = lambda * rel_step;
  const double slope = (n_e_at(lambda + h) - n_e_at(lambda - h)) / (2.0 * h);
  return n_e_at(lambda) - lambda * slope;
}

double channel_bandwidth(double f_resonant_thz, double q) {
  if (!(q > 0.0)) {
    throw ModelError("quality factor must be positive");
  }
  return f_resonant_thz * 1000.0 / q;
}

double thermal_drift(double delta_t, const DeviceModels& models) {
  return models.drift_sens * delta_t;
}

RingPenalty ring_thermal_penalty(double delta_t, const DeviceModels& models) {
  const double bw_req = 2.0 * thermal_drift(delta_t, models);
  if (bw_req > models.channel_spacing) {
    return {false, 0.0};
  }
  const double linewidth = models.lambda0 / models.q_nominal;
  return {true, models.k_ring_thm * bw_req / linewidth};
}

double loss_to_power(double loss_db, const DeviceModels& models) {
  return models.p_det_sense * (std::pow(10.0, loss_db / 10.0) - 1.0);
}

} // namespace glow
