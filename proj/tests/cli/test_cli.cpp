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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "glow/ingest.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("glow_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

void write(const std::string& name, const std::string& text) { std::ofstream(path(name)) << text; }

std::string read(const std::string& name) {
  std::ifstream in(path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI; stdout and stderr land in out.txt and err.txt.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(GLOW_BIN) + " " + args + " >" + path("out.txt") + " 2>" +
                          path("err.txt");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kTwoNet =
  "chip 20 20\n"
  "net 0 2 0\npin 2 5\npin 7 5\n"
  "net 1 2 0\npin 10 5\npin 15 5\n";

} // namespace

TEST_CASE("route the two-net fixture") {
  write("two.net", kTwoNet);
  REQUIRE(run_cli("gen-thermal --hotspots 0 --out " + path("zero.thm")) == 0);
  REQUIRE(run_cli("route --algo glow --netlist " + path("two.net") + " --thermal " + path("zero.thm") +
               " --out " + path("glow.json")) == 0);
  const glow::PowerReport g = glow::parse_report(read("glow.json"));
  CHECK(g.p_total == doctest::Approx(1.576729817897960).epsilon(1e-12));
  CHECK(g.trunk_count == 1);

  REQUIRE(run_cli("route --algo cat --netlist " + path("two.net") + " --thermal " + path("zero.thm") +
               " --out " + path("cat.json")) == 0);
  CHECK(g.p_total <= glow::parse_report(read("cat.json")).p_total * (1 + 1e-9));
}

TEST_CASE("cat and glow on a derived instance; determinism") {
  REQUIRE(run_cli("derive --nets 12 --seed 4 --out " + path("d.net")) == 0);
  REQUIRE(run_cli("gen-thermal --hotspots 3 --peak 12 --seed 4 --out " + path("d.thm")) == 0);
  write("d.cfg", "channel_spacing = 8\nc_max = 4\n");
  const std::string in = " --netlist " + path("d.net") + " --thermal " + path("d.thm") +
                         " --config " + path("d.cfg");
  REQUIRE(run_cli("route --algo cat" + in + " --out " + path("c.json")) == 0);
  REQUIRE(run_cli("route --algo glow" + in + " --out " + path("g1.json") + " --export-lp " +
               path("g.lp")) == 0);
  REQUIRE(run_cli("route --algo glow" + in + " --out " + path("g2.json")) == 0);
  CHECK(read("g1.json") == read("g2.json"));
  CHECK(glow::parse_report(read("g1.json")).p_total <=
        glow::parse_report(read("c.json")).p_total * (1 + 1e-9));
  const std::string lp = read("g.lp");
  CHECK(lp.find("Minimize") != std::string::npos);
  CHECK(lp.find("Binaries") != std::string::npos);
  CHECK(lp.find("W_0") != std::string::npos);

  REQUIRE(run_cli("export-lp" + in + " --out " + path("e.lp")) == 0);
  CHECK(read("e.lp").rfind("\\ generated by glow", 0) == 0);
}

TEST_CASE("error exits") {
  write("two.net", kTwoNet);
  CHECK(run_cli("route --netlist " + path("two.net") + " --thermal " + path("missing.thm")) == 2);
  const auto err = nlohmann::json::parse(read("err.txt"));
  CHECK(err.at("error").contains("file"));

  write("bad.net", "chip 20 20\nnet 0 2 0\npin 25 5\npin 7 5\n");
  CHECK(run_cli("route --netlist " + path("bad.net") + " --thermal " + path("zero.thm")) == 2);
  const auto perr = nlohmann::json::parse(read("err.txt"));
  CHECK(perr.at("error").at("line") == 3);

  CHECK(run_cli("derive --nets 0") == 2);
  CHECK(run_cli("route --algo magic --netlist x --thermal y") == 2);

  write("blocked.thm", "grid 1 1 20\n30\n");
  write("far.net", "chip 20 20\nnet 0 2 0\npin 2 5\npin 17 5\n");
  CHECK(run_cli("route --netlist " + path("far.net") + " --thermal " + path("blocked.thm")) == 1);
}

TEST_CASE("generators are deterministic") {
  REQUIRE(run_cli("derive --nets 35 --seed 1 --out " + path("a.net")) == 0);
  REQUIRE(run_cli("derive --nets 35 --seed 1 --out " + path("b.net")) == 0);
  CHECK(read("a.net") == read("b.net"));
  const glow::Netlist n = glow::parse_netlist(read("a.net"));
  CHECK(n.nets.size() == 35);

  REQUIRE(run_cli("derive --nets 35 --pins-total 95 --seed 1 --out " + path("ck1.net")) == 0);
  size_t pins = 0;
  for (const auto& net : glow::parse_netlist(read("ck1.net")).nets) {
    pins += net.pins.size();
  }
  CHECK(pins == 95);

  REQUIRE(run_cli("gen-thermal --hotspots 0 --out " + path("z.thm")) == 0);
  for (double v : glow::parse_thermal(read("z.thm")).values()) {
    CHECK(v == 0.0);
  }
  REQUIRE(run_cli("gen-thermal --hotspots 1 --peak 25 --seed 9 --out " + path("p1.thm")) == 0);
  REQUIRE(run_cli("gen-thermal --hotspots 1 --peak 25 --seed 9 --out " + path("p2.thm")) == 0);
  CHECK(read("p1.thm") == read("p2.thm"));
  double top = 0.0;
  for (double v : glow::parse_thermal(read("p1.thm")).values()) {
    top = std::max(top, v);
  }
  CHECK(top > 0.0);
  CHECK(top <= 25.0);
}
