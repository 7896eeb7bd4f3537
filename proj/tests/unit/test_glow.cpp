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


#include <map>
#include <set>
#include <string>
#include <vector>

#include "../support/checker.hpp"
#include "../support/fixtures.hpp"
#include "../support/instances.hpp"
#include "doctest.h"
#include "glow/cat.hpp"
#include "glow/errors.hpp"
#include "glow/glow_route.hpp"

using namespace glow;
using namespace glow::testing;

namespace {

int count_prefix(const ilp::Model& m, const std::string& prefix) {
  int n = 0;
  for (const auto& v : m.variables()) {
    n += v.name.rfind(prefix, 0) == 0;
  }
  return n;
}

const ilp::Constraint& row_named(const ilp::Model& m, const std::string& name) {
  for (const auto& r : m.constraints()) {
    if (r.name == name) {
      return r;
    }
  }
  FAIL("no row " << name);
  throw std::logic_error(name);
}

bool row_holds(const ilp::Model& m, const ilp::Constraint& r,
               const std::map<std::string, double>& values) {
  double act = 0.0;
  for (const auto& t : r.terms) {
    act += t.coef * values.at(m.variables()[t.var].name);
  }
  switch (r.sense) {
    case ilp::Sense::less_equal: return act <= r.rhs + 1e-12;
    case ilp::Sense::greater_equal: return act >= r.rhs - 1e-12;
    case ilp::Sense::equal: return std::abs(act - r.rhs) <= 1e-12;
  }
  return false;
}

GlowModel model_for(const TrunkPlan& plan, const OpticalNetlist& onet, const ThermalProfile& th,
                    const DeviceModels& m) {
  return build_ilp(plan, onet, build_access_table(onet, plan, th, m), th, m);
}

} // namespace

TEST_CASE("one trunk, two links") {
  const OpticalNetlist onet =
    build_optical_netlist(two_pin_nets({{{2, 5}, {7, 5}}, {{10, 5}, {15, 5}}}), 3.7).optical;
  const TrunkPlan plan = make_plan({make_trunk(0, Orientation::horizontal, 5, 0, 20)});
  const ThermalProfile cold = ThermalProfile::zero(20, 20);
  const GlowModel g = model_for(plan, onet, cold, DeviceModels{});
  CHECK(count_prefix(g.model, "S_") == 2);
  CHECK(count_prefix(g.model, "SUM_") == 2);
  CHECK(count_prefix(g.model, "LAM_") == 2);
  CHECK(count_prefix(g.model, "W_") == 1);
  CHECK(g.crossings.empty());

  const ilp::SolveResult best = ilp::brute_force(g.model);
  REQUIRE(best.has_solution);
  CHECK(g.decode(best.values, 2) == std::vector<int>{0, 0});
  CHECK(best.objective == doctest::Approx(1.576729817897960).epsilon(1e-12));

  Config cfg;
  cfg.max_placement_revisions = 0;
  const GlowResult r = glow_route(plan, onet, cold, cfg);
  CHECK(r.status == ilp::Status::optimal);
  CHECK(r.route.report.p_total == doctest::Approx(1.576729817897960).epsilon(1e-12));
  CHECK(r.objective == doctest::Approx(r.route.report.p_total).epsilon(1e-9));
}

TEST_CASE("linearisation rows") {
  // One net with five pseudo-pins on two crossing trunks.
  Netlist n;
  n.chip_width = n.chip_height = 20;
  n.nets.push_back({0, 0, {{10, 10}, {10, 2}, {10, 18}, {2, 10}, {18, 10}}});
  const OpticalNetlist onet = build_optical_netlist(n, 3.7).optical;
  REQUIRE(onet.pin_max() == 5);
  const TrunkPlan plan = make_plan({make_trunk(0, Orientation::horizontal, 10, 0, 20),
                                    make_trunk(1, Orientation::vertical, 10, 0, 20)});
  const GlowModel g = model_for(plan, onet, ThermalProfile::zero(20, 20), DeviceModels{});
  REQUIRE(g.crossings.size() == 1);
  const ilp::Model& m = g.model;

  const auto& x_lo = row_named(m, "x_lo_0_1");
  const auto& x_hi = row_named(m, "x_hi_0_1");
  auto crossing_ok = [&](double wi, double wj, double wij) {
    const std::map<std::string, double> v{{"W_0", wi}, {"W_1", wj}, {"W_0_1", wij}};
    return row_holds(m, x_lo, v) && row_holds(m, x_hi, v);
  };
  CHECK(crossing_ok(1, 1, 1));
  CHECK_FALSE(crossing_ok(1, 1, 0));
  CHECK(crossing_ok(1, 0, 0));
  CHECK_FALSE(crossing_ok(1, 0, 1));
  CHECK(crossing_ok(0, 0, 0));

  const auto& lo = row_named(m, "lam_lo_0_0");
  const auto& hi = row_named(m, "lam_hi_0_0");
  auto lam_ok = [&](double sum, double lam) {
    const std::map<std::string, double> v{{"SUM_0_0", sum}, {"LAM_0_0", lam}};
    return row_holds(m, lo, v) && row_holds(m, hi, v);
  };
  CHECK(lam_ok(3, 1));
  CHECK_FALSE(lam_ok(3, 0));
  CHECK(lam_ok(0, 0));
  CHECK_FALSE(lam_ok(0, 1));
  CHECK(lam_ok(1, 1));
}

TEST_CASE("crossing-free trunk wins a tie") {
  const OpticalNetlist onet =
    build_optical_netlist(two_pin_nets({{{1, 2}, {9, 2}}, {{12, 12}, {18, 18}}}), 3.7).optical;
  const TrunkPlan plan = make_plan({make_trunk(0, Orientation::horizontal, 2, 0, 20),
                                    make_trunk(1, Orientation::horizontal, 15, 10, 20),
                                    make_trunk(2, Orientation::vertical, 15, 0, 20)});
  const ThermalProfile cold = ThermalProfile::zero(20, 20);
  const DeviceModels models;
  const AccessTable a = build_access_table(onet, plan, cold, models);
  REQUIRE(a.at(1, 1).feasible());
  REQUIRE(a.at(1, 2).feasible());
  REQUIRE(a.at(1, 1).p_path == a.at(1, 2).p_path);

  Config cfg;
  cfg.max_placement_revisions = 0;
  const GlowResult r = glow_route(plan, onet, cold, cfg);
  CHECK(r.route.assignment.link_trunk == std::vector<int>{0, 1});
  CHECK(r.route.report.p_cross == 0.0);

  const RouteResult crossed = make_route(plan, onet, cold, models, {0, 2});
  CHECK(crossed.report.p_total - r.route.report.p_total ==
        doctest::Approx(models.p_cross_unit).epsilon(1e-9));
}

TEST_CASE("link without a feasible trunk is reported") {
  const OpticalNetlist onet =
    build_optical_netlist(two_pin_nets({{{2, 5}, {7, 5}}, {{3, 2}, {3, 18}}}), 3.7).optical;
  const TrunkPlan plan = make_plan({make_trunk(0, Orientation::horizontal, 5, 0, 20)});
  const ThermalProfile cold = ThermalProfile::zero(20, 20);
  const GlowModel g = model_for(plan, onet, cold, DeviceModels{});
  CHECK(g.unroutable_links == std::vector<int>{1});
  Config cfg;
  cfg.max_placement_revisions = 0;
  try {
    glow_route(plan, onet, cold, cfg);
    FAIL("expected a routing error");
  } catch (const RoutingError& e) {
    CHECK(e.links() == std::vector<int>{1});
  }
}

TEST_CASE("zero time limit without an incumbent times out") {
  const OpticalNetlist onet =
    build_optical_netlist(two_pin_nets({{{2, 5}, {7, 5}}, {{10, 5}, {15, 5}}}), 3.7).optical;
  const TrunkPlan plan = make_plan({make_trunk(0, Orientation::horizontal, 5, 0, 20)});
  GlowOptions opt;
  opt.time_limit_s = 0.0;
  CHECK_THROWS_AS(glow_route(plan, onet, ThermalProfile::zero(20, 20), Config{}, opt), TimeoutError);
}

TEST_CASE("glow beats or ties cat and decodes consistently") {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto in = medium_instance(seed);
    if (!in) {
      continue;
    }
    RouteResult cat;
    try {
      cat = cat_route(in->plan, in->onet, in->thermal, in->cfg);
    } catch (const RoutingError&) {
      continue;
    }
    Config fixed = in->cfg;
    fixed.max_placement_revisions = 0;
    const GlowResult g = glow_route(cat.plan, in->onet, in->thermal, fixed);
    CHECK(g.route.report.p_total <= cat.report.p_total * (1 + 1e-9));
    CHECK(g.objective == doctest::Approx(g.route.report.p_total).epsilon(1e-9));
    const Violations v = check_glow_values(g.model, g.values, in->onet);
    CHECK_MESSAGE(v.ok(), "seed ", seed, ": ", v.ok() ? "" : v.items.front());
    ++compared;
  }
  CHECK(compared >= 10);
}

TEST_CASE("variable names stay unique on large models") {
  DeriveOptions d;
  d.nets = 120;
  d.seed = 5;
  Config cfg;
  cfg.c_max = 4;
  const OpticalNetlist onet = build_optical_netlist(derive_netlist(d), 3.7).optical;
  const ThermalProfile cold = ThermalProfile::zero(20, 20);
  const TrunkPlan plan = place_trunks(onet, cold, cfg);
  const GlowModel g = model_for(plan, onet, cold, cfg.models);
  REQUIRE(g.model.variable_count() >= 1000);
  std::set<std::string> names;
  for (const auto& v : g.model.variables()) {
    names.insert(v.name);
  }
  CHECK(names.size() == g.model.variables().size());
}
