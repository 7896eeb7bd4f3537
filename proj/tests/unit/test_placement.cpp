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


#include <vector>

#include "../support/fixtures.hpp"
#include "../support/instances.hpp"
#include "doctest.h"
#include "glow/access.hpp"
#include "glow/errors.hpp"
#include "glow/placement.hpp"

using namespace glow;
using namespace glow::testing;

namespace {

OpticalNetlist optical(const Netlist& n) { return build_optical_netlist(n, 3.7).optical; }

} // namespace

TEST_CASE("first trunk sits on the lone median") {
  const OpticalNetlist onet = optical(two_pin_nets({{{10, 10}, {10, 16}}}));
  const TrunkPlan plan = place_trunks(onet, ThermalProfile::zero(20, 20), Config{});
  REQUIRE(plan.trunks.size() == 1);
  const Trunk& t = plan.trunks[0];
  CHECK(t.horizontal());
  CHECK(t.coordinate == 10.0);
  CHECK(t.lo == 0.0);
  CHECK(t.hi == 20.0);
}

TEST_CASE("placement stops once capacity covers the links") {
  std::vector<std::pair<Point, Point>> links;
  for (int i = 0; i < 40; ++i) {
    links.push_back({{0.25 + 0.45 * i, 2}, {0.25 + 0.45 * i, 18}});
  }
  const OpticalNetlist onet = optical(two_pin_nets(links));
  REQUIRE(onet.links.size() == 40);
  const TrunkPlan plan = place_trunks(onet, ThermalProfile::zero(20, 20), Config{});
  CHECK(plan.trunks.size() == 2);
  CHECK(plan.capacity() >= 40);
}

TEST_CASE("hot rows push the trunk to the nearest cool row") {
  ThermalProfile hot = ThermalProfile::zero(20, 20);
  for (int c = 0; c < hot.cols(); ++c) {
    hot.at_tile(c, 10) = 20.0;
  }
  const OpticalNetlist onet = optical(two_pin_nets({{{10, 10}, {10, 16}}}));
  const TrunkPlan plan = place_trunks(onet, hot, Config{});
  REQUIRE(!plan.trunks.empty());
  const Trunk& t = plan.trunks[0];
  CHECK(t.horizontal());
  CHECK(t.coordinate != 10.0);
  CHECK(std::abs(t.coordinate - 10.0) <= 1.0);
  CHECK(trunk_is_cool(t, hot, 15.0));
}

TEST_CASE("placement fails when every row is hot") {
  ThermalProfile hot(1, 1, 20.0, {30.0});
  const OpticalNetlist onet = optical(two_pin_nets({{{10, 10}, {10, 16}}}));
  CHECK_THROWS_AS(place_trunks(onet, hot, Config{}), PlacementError);
}

TEST_CASE("placed capacity covers the links") {
  int placed = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto in = medium_instance(seed);
    if (!in) {
      continue;
    }
    ++placed;
    CHECK(in->plan.capacity() >= static_cast<long long>(in->onet.links.size()));
    for (size_t i = 0; i < in->plan.trunks.size(); ++i) {
      CHECK(in->plan.trunks[i].id == static_cast<int>(i));
      CHECK(trunk_is_cool(in->plan.trunks[i], in->thermal, in->cfg.models.temp_threshold));
    }
  }
  CHECK(placed >= 20);
}

TEST_CASE("revision rounds target stranded links") {
  const OpticalNetlist onet = optical(two_pin_nets({{{2, 2}, {2, 18}}, {{3, 6}, {17, 6}}}));
  TrunkPlan plan = make_plan({make_trunk(0, Orientation::horizontal, 6, 0, 20)});
  plan.next_round = 2;
  const std::vector<int> stranded{0};
  const int added = add_placement_round(plan, onet, ThermalProfile::zero(20, 20), Config{}, stranded);
  CHECK(added > 0);
  bool serves = false;
  for (const Trunk& t : plan.trunks) {
    serves |= link_access(onet.links[0], t, ThermalProfile::zero(20, 20), DeviceModels{}).feasible();
  }
  CHECK(serves);
  CHECK(plan.next_round == 3);
}

TEST_CASE("link access geometry") {
  const ThermalProfile cold = ThermalProfile::zero(20, 20);
  const DeviceModels m;
  const Trunk t = make_trunk(0, Orientation::horizontal, 5, 0, 10);

  const LinkAccess on = link_access({0, 0, {2, 5}, {8, 5}, 6}, t, cold, m);
  CHECK(on.wl_e == 0.0);
  CHECK(on.wl_o == 6.0);
  CHECK(on.timing_ok);
  CHECK(on.feasible());

  const LinkAccess off = link_access({0, 0, {2, 3}, {8, 9}, 12}, t, cold, m);
  CHECK(off.wl_e == 6.0);
  CHECK(off.wl_o == 6.0);
  CHECK(off.mod_pos == Point{2, 5});
  CHECK(off.det_pos == Point{8, 5});

  const LinkAccess clamp = link_access({0, 0, {-1, 5}, {8, 5}, 9}, t, cold, m);
  CHECK(clamp.mod_pos == Point{0, 5});
  CHECK(clamp.wl_e == 1.0);
  CHECK(clamp.wl_o == 8.0);

  // Shorter than the critical length along the trunk: never on time.
  const LinkAccess slow = link_access({0, 0, {2, 1}, {5, 9}, 11}, t, cold, m);
  CHECK_FALSE(slow.timing_ok);
}

TEST_CASE("link access thermal limits") {
  ThermalProfile warm = ThermalProfile::zero(20, 20);
  warm.at_tile(2, 5) = 16.0;
  DeviceModels m;
  const Trunk t = make_trunk(0, Orientation::horizontal, 5.5, 0, 20);
  const LinkAccess a = link_access({0, 0, {2.5, 5.5}, {12, 5.5}, 9.5}, t, warm, m);
  CHECK(a.t_var == 16.0);
  CHECK(a.timing_ok);
  CHECK_FALSE(a.thermal_ok);

  warm.at_tile(2, 5) = 4.0;
  const LinkAccess alias = link_access({0, 0, {2.5, 5.5}, {12, 5.5}, 9.5}, t, warm, m);
  CHECK_FALSE(alias.thermal_ok);
  warm.at_tile(2, 5) = 3.0;
  m.channel_spacing = 8.0;
  const LinkAccess ok = link_access({0, 0, {2.5, 5.5}, {12, 5.5}, 9.5}, t, warm, m);
  CHECK(ok.thermal_ok);
  CHECK(ok.p_ring == doctest::Approx(2 * 0.4119793548387097).epsilon(1e-12));
}

TEST_CASE("trunk crossings") {
  using O = Orientation;
  CHECK(trunk_crossings(make_plan({make_trunk(0, O::horizontal, 5, 0, 10),
                                   make_trunk(1, O::vertical, 5, 0, 10)}))
          .size() == 1);
  CHECK(trunk_crossings(make_plan({make_trunk(0, O::horizontal, 5, 0, 10),
                                   make_trunk(1, O::vertical, 12, 0, 10)}))
          .empty());
  for (int k = 1; k <= 4; ++k) {
    std::vector<Trunk> ts;
    for (int i = 0; i < k; ++i) {
      ts.push_back(make_trunk(2 * i, O::horizontal, 2 + 4 * i, 0, 20));
      ts.push_back(make_trunk(2 * i + 1, O::vertical, 3 + 4 * i, 0, 20));
    }
    const auto c = trunk_crossings(make_plan(ts));
    REQUIRE(c.size() == static_cast<size_t>(k * k));
    CHECK(c.front() == Crossing{0, 1});
  }
}

TEST_CASE("parallel access table matches the serial one") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto in = medium_instance(seed);
    if (!in) {
      continue;
    }
    CHECK(build_access_table(in->onet, in->plan, in->thermal, in->cfg.models) ==
          build_access_table_serial(in->onet, in->plan, in->thermal, in->cfg.models));
  }
}
