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


#include <cmath>

#include "doctest.h"
#include "glow/errors.hpp"
#include "glow/oil.hpp"

using namespace glow;
using doctest::Approx;

TEST_CASE("critical length") {
  DeviceModels m;
  CHECK(critical_length(m) == Approx(3.7).epsilon(1e-12));
  m.tau_conv = 0;
  CHECK(critical_length(m) == 0.0);
  m.tau_conv = 26;
  CHECK(critical_length(m) == Approx(1.0).epsilon(1e-12));
  m.tau_e = m.tau_o;
  CHECK_THROWS_AS(critical_length(m), ModelError);
}

TEST_CASE("ring quality factor") {
  CHECK(ring_q_factor({0.99, 0.99, 0.99, 31.416, 4.2}, 1.55) ==
        Approx(8869.519100317329).epsilon(1e-12));
  const double r = std::cbrt(0.5);
  CHECK(ring_q_factor({r, r, r, 10.0, 4.0}, 1.55) == Approx(114.6550435653772).epsilon(1e-12));
  CHECK_THROWS_AS(ring_q_factor({1.0, 1.0, 1.0, 10.0, 4.0}, 1.55), ModelError);
}

TEST_CASE("group index") {
  CHECK(group_index([](double) { return 2.4; }, 1.55) == Approx(2.4).epsilon(1e-9));
  CHECK(group_index([](double l) { return 3.0 + 0.5 * l; }, 1.55) == Approx(3.0).epsilon(1e-9));
  CHECK(std::abs(group_index([](double l) { return 2.0 * l; }, 1.55)) < 1e-8);
  CHECK(std::abs(group_index([](double l) { return 2.0 * l; }, 1310.0)) < 1e-5);
}

TEST_CASE("channel bandwidth") {
  CHECK(channel_bandwidth(193.4, 8869) == Approx(21.80629157740444).epsilon(1e-12));
  CHECK(channel_bandwidth(193.4, 1) == Approx(193400.0));
  CHECK(channel_bandwidth(193.4, 10000) == Approx(19.34).epsilon(1e-12));
  CHECK_THROWS_AS(channel_bandwidth(193.4, 0), ModelError);
}

TEST_CASE("thermal drift and ring penalty") {
  const DeviceModels m;
  CHECK(thermal_drift(15, m) == Approx(1.8));
  CHECK(thermal_drift(0, m) == 0.0);
  CHECK(thermal_drift(20, m) == Approx(2.4));

  const RingPenalty cold = ring_thermal_penalty(0, m);
  CHECK(cold.feasible);
  CHECK(cold.per_ring_mw == 0.0);
  CHECK_FALSE(ring_thermal_penalty(10, m).feasible);
  const double edge = m.channel_spacing / (2 * m.drift_sens);
  CHECK(ring_thermal_penalty(edge, m).feasible);
  CHECK_FALSE(ring_thermal_penalty(edge * (1 + 1e-9), m).feasible);

  DeviceModels wide = m;
  wide.channel_spacing = 8.0;
  const RingPenalty p = ring_thermal_penalty(3, wide);
  CHECK(p.feasible);
  CHECK(p.per_ring_mw == Approx(0.4119793548387097).epsilon(1e-12));
  CHECK(p.per_link_mw() == Approx(2 * 0.4119793548387097).epsilon(1e-12));
}

TEST_CASE("loss to power") {
  const DeviceModels m;
  CHECK(loss_to_power(0, m) == 0.0);
  CHECK(loss_to_power(10 * std::log10(2.0), m) == Approx(0.1).epsilon(1e-12));
  CHECK(loss_to_power(10, m) == Approx(0.9).epsilon(1e-12));
}

TEST_CASE("model validation") {
  DeviceModels m;
  CHECK_NOTHROW(m.validate());
  m.tau_o = std::nan("");
  CHECK_THROWS_AS(m.validate(), ModelError);
  m = DeviceModels{};
  m.tau_e = 5;
  CHECK_THROWS_AS(m.validate(), ModelError);
}
