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


// glow: route, derive, gen-thermal, export-lp.
//
// Exit codes: 0 success, 1 routing failure, 2 input error, 3 timeout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "glow/errors.hpp"
#include "glow/generate.hpp"
#include "glow/glow_route.hpp"
#include "glow/ingest.hpp"
#include "glow/pipeline.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kRouting = 1, kInput = 2, kTimeout = 3 };

struct FileError : std::runtime_error {
  FileError(const std::string& path, const std::string& what)
    : std::runtime_error(what), path(path) {}
  std::string path;
};

struct InputFailure : std::runtime_error {
  InputFailure(const std::string& path, const glow::ParseError& e)
    : std::runtime_error(e.detail()), path(path), line(e.line()), column(e.column()) {}
  std::string path;
  int line;
  int column;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError(path, "cannot open file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw FileError(path, "cannot write file");
  }
}

template <class Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const glow::ParseError& e) {
    throw InputFailure(path, e);
  }
}

int fail(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  json err{{"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) {
    err[k] = v;
  }
  std::cerr << json{{"error", err}}.dump(2) << '\n';
  return code;
}

struct RouteArgs {
  std::string algo = "glow";
  std::string netlist;
  std::string thermal;
  std::string config;
  std::string out;
  std::string export_lp;
  double time_limit = 3600.0;
};

int cmd_route(const RouteArgs& a) {
  const glow::Netlist netlist = load(a.netlist, glow::parse_netlist);
  const glow::ThermalProfile thermal = load(a.thermal, glow::parse_thermal);
  const glow::Config cfg =
    a.config.empty() ? glow::Config{} : load(a.config, glow::parse_config);

  glow::PipelineOptions opt;
  opt.algo = a.algo == "cat" ? glow::Algorithm::cat : glow::Algorithm::glow;
  opt.time_limit_s = a.time_limit;
  if (!a.export_lp.empty()) {
    opt.on_model = [&](const glow::GlowModel& g) {
      write_output(a.export_lp, glow::ilp::export_lp(g.model));
    };
  }
  const glow::PipelineResult r = glow::run_pipeline(netlist, thermal, cfg, opt);
  write_output(a.out, glow::write_report(r.legal.report));
  if (r.status == glow::ilp::Status::timeout) {
    return fail(kTimeout, "timeout", "time limit reached; report holds the best assignment found");
  }
  return kOk;
}

int cmd_export_lp(const RouteArgs& a) {
  const glow::Netlist netlist = load(a.netlist, glow::parse_netlist);
  const glow::ThermalProfile thermal = load(a.thermal, glow::parse_thermal);
  const glow::Config cfg =
    a.config.empty() ? glow::Config{} : load(a.config, glow::parse_config);
  const auto pre = glow::build_optical_netlist(netlist, glow::critical_length(cfg.models));
  if (pre.optical.links.empty()) {
    return fail(kInput, "input", "netlist has no optical links");
  }
  const glow::TrunkPlan plan = glow::place_trunks(pre.optical, thermal, cfg);
  const glow::AccessTable access =
    glow::build_access_table(pre.optical, plan, thermal, cfg.models);
  const glow::GlowModel g = glow::build_ilp(plan, pre.optical, access, thermal, cfg.models);
  write_output(a.out, glow::ilp::export_lp(g.model));
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal-aware WDM optical interconnect router"};
  app.require_subcommand(1);

  RouteArgs ra;
  auto* route = app.add_subcommand("route", "Cluster, place, route and legalize a netlist");
  route->add_option("--algo", ra.algo, "Router")->check(CLI::IsMember({"cat", "glow"}));
  route->add_option("--netlist", ra.netlist, "Netlist file")->required();
  route->add_option("--thermal", ra.thermal, "Thermal grid file")->required();
  route->add_option("--config", ra.config, "Configuration file");
  route->add_option("--out", ra.out, "Report path (stdout when omitted)");
  route->add_option("--export-lp", ra.export_lp, "Write the integer program (glow only)");
  route->add_option("--time-limit", ra.time_limit, "Solver time limit in seconds")
    ->check(CLI::PositiveNumber);

  RouteArgs la;
  auto* lp = app.add_subcommand("export-lp", "Write the integer program for the initial placement");
  lp->add_option("--netlist", la.netlist, "Netlist file")->required();
  lp->add_option("--thermal", la.thermal, "Thermal grid file")->required();
  lp->add_option("--config", la.config, "Configuration file");
  lp->add_option("--out", la.out, "Output path (stdout when omitted)");

  glow::DeriveOptions dopt;
  std::vector<double> chip{dopt.chip_width, dopt.chip_height};
  std::string dout;
  auto* derive = app.add_subcommand("derive", "Generate a synthetic netlist (CK1: --nets 35 --pins-total 95)");
  derive->add_option("--nets", dopt.nets, "Net count")->check(CLI::PositiveNumber);
  derive->add_option("--chip-mm", chip, "Chip width and height")->expected(2);
  derive->add_option("--seed", dopt.seed, "RNG seed");
  derive->add_option("--pins-min", dopt.pins_min, "Fewest pins per net")->check(CLI::Range(2, 1 << 20));
  derive->add_option("--pins-max", dopt.pins_max, "Most pins per net")->check(CLI::Range(2, 1 << 20));
  derive->add_option("--pins-total", dopt.pins_total, "Exact total pin count");
  derive->add_option("--blocks", dopt.blocks, "Functional blocks pins gather around (0: uniform)")
    ->check(CLI::NonNegativeNumber);
  derive->add_option("--out", dout, "Output path (stdout when omitted)");

  glow::ThermalOptions topt;
  std::vector<int> grid{topt.cols, topt.rows};
  std::string tout;
  auto* thermal = app.add_subcommand("gen-thermal", "Generate a Gaussian-hotspot thermal grid");
  thermal->add_option("--hotspots", topt.hotspots, "Hotspot count")->check(CLI::NonNegativeNumber);
  thermal->add_option("--peak", topt.peak, "Peak |dT| in degC")->check(CLI::NonNegativeNumber);
  thermal->add_option("--sigma", topt.sigma, "Hotspot sigma in mm")->check(CLI::PositiveNumber);
  thermal->add_option("--grid", grid, "Columns and rows")->expected(2);
  thermal->add_option("--tile", topt.tile, "Tile edge in mm")->check(CLI::PositiveNumber);
  thermal->add_option("--seed", topt.seed, "RNG seed");
  thermal->add_option("--out", tout, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kInput, "usage", e.what());
  }

  try {
    if (*route) {
      return cmd_route(ra);
    }
    if (*lp) {
      return cmd_export_lp(la);
    }
    if (*derive) {
      dopt.chip_width = chip[0];
      dopt.chip_height = chip[1];
      write_output(dout, glow::write_netlist(glow::derive_netlist(dopt)));
      return kOk;
    }
    if (*thermal) {
      topt.cols = grid[0];
      topt.rows = grid[1];
      write_output(tout, glow::write_thermal(glow::generate_thermal(topt)));
      return kOk;
    }
  } catch (const InputFailure& e) {
    return fail(kInput, "parse", e.what(),
                {{"file", e.path}, {"line", e.line}, {"column", e.column}});
  } catch (const FileError& e) {
    return fail(kInput, "file", e.what(), {{"file", e.path}});
  } catch (const glow::ModelError& e) {
    return fail(kInput, "model", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kInput, "input", e.what());
  } catch (const glow::TimeoutError& e) {
    return fail(kTimeout, "timeout", e.what());
  } catch (const glow::RoutingError& e) {
    return fail(kRouting, "routing", e.what(), {{"links", e.links()}});
  } catch (const glow::PlacementError& e) {
    return fail(kRouting, "placement", e.what());
  } catch (const std::exception& e) {
    return fail(kRouting, "internal", e.what());
  }
  return kInput;
}
