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

// Optical interconnect library: closed-form device, loss and thermal models.
// Every function here is pure and safe to call concurrently.

#pragma once

#include <functional>

namespace glow {

/// Device and interconnect parameters. Units are part of the field names'
/// contract: delays in ps or ps/mm, losses in dB or dB/cm, powers in mW,
/// wavelengths in nm, temperatures in degrees C.
struct DeviceModels {
  double tau_o = 11.0;           // ps/mm on the optical waveguide
  double tau_e = 37.0;           // ps/mm on repeated Cu
  double tau_conv = 96.2;        // ps, modulation + detection per bit
  double alpha_wg = 1.5;         // dB/cm
  double loss_mod_db = 2.0;      // dB
  double p_det_sense = 0.1;      // mW
  double p_channel = 0.2;        // mW per active (net, trunk) channel
  double p_trunk_base = 1.0;     // mW per lit trunk
  double p_cross_unit = 0.05;    // mW per active crossing
  double k_trunk_thm = 0.01;     // mW / (degC * mm)
  double k_ring_thm = 0.1;       // mW per unit bandwidth ratio
  double lambda0 = 1550.0;       // nm
  double drift_sens = 0.12;      // nm / degC
  double channel_spacing = 0.8;  // nm
  double q_nominal = 8869.0;
  double temp_threshold = 15.0;  // degC
  double p_laser_max = 10.0;     // mW per channel

  /// Throws ModelError when a field is non-finite or out of its domain.
  void validate() const;
};

/// Micro-ring geometry. Lengths (circumference, resonant wavelength) must
/// share a unit.
struct RingGeometry {
  double r1 = 0.0;
  double r2 = 0.0;
  double a = 0.0;
  double circumference = 0.0;
  double n_g = 0.0;
};

/// Shortest link (mm) for which an optical link beats repeated Cu on delay.
double critical_length(const DeviceModels& models);

/// Loaded quality factor of an add-drop ring; `lambda0` in the same unit as
/// `g.circumference`.
double ring_q_factor(const RingGeometry& g, double lambda0);

/// Group index n_e(lambda) - lambda * dn_e/dlambda, derivative by central
/// difference with step lambda * rel_step.
double group_index(const std::function<double(double)>& n_e_at, double lambda,
                   double rel_step = 1e-6);

/// Resonance bandwidth in GHz given the resonant frequency in THz.
double channel_bandwidth(double f_resonant_thz, double q);

/// Resonance drift in nm for a temperature excursion.
double thermal_drift(double delta_t, const DeviceModels& models);

struct RingPenalty {
  bool feasible = true;
  double per_ring_mw = 0.0;

  /// Each link carries one modulator ring and one detector ring.
  double per_link_mw() const { return 2.0 * per_ring_mw; }
};

/// Power paid to widen a ring's passband enough to tolerate `delta_t`.
/// Infeasible when the widened passband would overlap the neighbouring
/// channel (required bandwidth above channel_spacing).
RingPenalty ring_thermal_penalty(double delta_t, const DeviceModels& models);

/// Extra laser power (mW) above the detector floor that offsets `loss_db`.
double loss_to_power(double loss_db, const DeviceModels& models);

} // namespace glow
