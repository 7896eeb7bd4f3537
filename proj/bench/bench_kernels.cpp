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


// Times each OpenMP kernel against its serial reference and checks that
// both produce the same result.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "glow/access.hpp"
#include "glow/generate.hpp"
#include "glow/ilp.hpp"
#include "glow/placement.hpp"
#include "glow/preprocess.hpp"
#include "glow/simplex.hpp"

using namespace glow;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx  %s\n", name, 1e3 * serial,
              1e3 * parallel, serial / parallel, same ? "identical" : "MISMATCH");
  return same;
}

Netlist big_netlist() {
  DeriveOptions d;
  d.nets = 2000;
  d.chip_width = d.chip_height = 40;
  d.pins_max = 24;
  d.blocks = 12;
  d.seed = 3;
  return derive_netlist(d);
}

} // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::stoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  bool ok = true;

  const Netlist netlist = big_netlist();
  {
    PreprocessResult a, b;
    const double s = best_of(reps, [&] { a = build_optical_netlist_serial(netlist, 3.7); });
    const double p = best_of(reps, [&] { b = build_optical_netlist(netlist, 3.7); });
    ok &= report("per-net clustering", s, p, a.optical == b.optical && a.residual_nets == b.residual_nets);
  }

  const OpticalNetlist onet = build_optical_netlist(netlist, 3.7).optical;
  ThermalOptions t;
  t.cols = t.rows = 40;
  t.peak = 12;
  const ThermalProfile thermal = generate_thermal(t);
  Config cfg;
  cfg.c_max = 8;
  cfg.models.channel_spacing = 8.0;
  const TrunkPlan plan = place_trunks(onet, thermal, cfg);
  {
    AccessTable a, b;
    const double s = best_of(reps, [&] { a = build_access_table_serial(onet, plan, thermal, cfg.models); });
    const double p = best_of(reps, [&] { b = build_access_table(onet, plan, thermal, cfg.models); });
    ok &= report("access table", s, p, a == b);
  }

  {
    const int rows = 1200, cols = 2400;
    Rng rng(7);
    std::vector<double> base(static_cast<size_t>(rows) * cols), cost(cols);
    for (double& v : base) {
      v = rng.uniform(-1, 1);
    }
    for (double& v : cost) {
      v = rng.uniform(-1, 1);
    }
    std::vector<double> a, b, ca, cb;
    const int pivots = 20;
    const double s = best_of(reps, [&] {
      a = base;
      ca = cost;
      for (int k = 0; k < pivots; ++k) {
        ilp::pivot_tableau_serial(a, rows, cols, k * 37 % rows, k * 53 % cols, ca);
      }
    });
    const double p = best_of(reps, [&] {
      b = base;
      cb = cost;
      for (int k = 0; k < pivots; ++k) {
        ilp::pivot_tableau(b, rows, cols, k * 37 % rows, k * 53 % cols, cb);
      }
    });
    ok &= report("simplex pivot x20", s, p, a == b && ca == cb);
  }

  {
    Rng rng(5);
    ilp::Model m;
    const int n = 22;
    for (int j = 0; j < n; ++j) {
      m.set_objective(m.add_binary("x" + std::to_string(j)), rng.uniform(-1, 1));
    }
    for (int i = 0; i < 4; ++i) {
      std::vector<ilp::Term> terms;
      for (int j = 0; j < n; ++j) {
        terms.push_back({j, static_cast<double>(rng.uniform_int(1, 4))});
      }
      m.add_constraint("r" + std::to_string(i), terms, ilp::Sense::less_equal, 20);
    }
    ilp::SolveResult a, b;
    const double s = best_of(reps, [&] { a = ilp::brute_force_serial(m); });
    const double p = best_of(reps, [&] { b = ilp::brute_force(m); });
    ok &= report("brute force", s, p, a.values == b.values && a.objective == b.objective);
  }
  return ok ? 0 : 1;
}
