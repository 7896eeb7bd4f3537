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

// Text formats: netlists, thermal grids, configuration and reports.
//
//   netlist:  chip <W> <H>
//             net <id> <npins> <driver_index>
//             pin <x> <y>            (npins times)
//   thermal:  grid <cols> <rows> <tile_mm>
//             <cols values>          (rows times, row 0 first = lowest y)
//   config:   key = value            ('#' starts a comment)
//
// Blank lines and '#' comments are accepted in every format.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glow/geometry.hpp"
#include "glow/oil.hpp"
#include "glow/report.hpp"

namespace glow {

struct Net {
  int id = 0;
  int driver = 0;  // index into pins
  std::vector<Point> pins;

  friend bool operator==(const Net&, const Net&) = default;
};

struct Netlist {
  double chip_width = 0.0;
  double chip_height = 0.0;
  std::vector<Net> nets;

  friend bool operator==(const Netlist&, const Netlist&) = default;
};

/// Uniform square tiles of |delta T| (degC); tile (c, r) covers
/// [c*tile, (c+1)*tile) x [r*tile, (r+1)*tile).
class ThermalProfile {
public:
  ThermalProfile() = default;
  ThermalProfile(int cols, int rows, double tile_mm, std::vector<double> values);

  /// All-zero field covering a width x height chip with 1 mm tiles.
  static ThermalProfile zero(double width, double height, double tile_mm = 1.0);

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  double tile() const { return tile_; }
  const std::vector<double>& values() const { return values_; }

  double at_tile(int col, int row) const { return values_[static_cast<size_t>(row) * cols_ + col]; }
  double& at_tile(int col, int row) { return values_[static_cast<size_t>(row) * cols_ + col]; }

  int col_of(double x) const;
  int row_of(double y) const;

  /// Value of the tile containing p; points on the far edge use the last tile.
  double at(const Point& p) const;

  bool covers(double width, double height) const;

  /// Largest tile value touched by an axis-aligned segment.
  double max_along(const Point& a, const Point& b) const;

  /// Integral of |delta T| along an axis-aligned segment (degC * mm).
  double integral_along(const Point& a, const Point& b) const;

  friend bool operator==(const ThermalProfile&, const ThermalProfile&) = default;

private:
  int cols_ = 0;
  int rows_ = 0;
  double tile_ = 1.0;
  std::vector<double> values_;
};

struct Config {
  DeviceModels models;
  int c_max = 32;
  int max_placement_revisions = 8;
  std::uint64_t seed = 1;
  double min_ring_pitch = 0.04;  // mm

  void validate() const;
};

Netlist parse_netlist(std::string_view text);
std::string write_netlist(const Netlist& netlist);

ThermalProfile parse_thermal(std::string_view text);
std::string write_thermal(const ThermalProfile& profile);

Config parse_config(std::string_view text);
std::string write_config(const Config& config);

std::string write_report(const PowerReport& report);
PowerReport parse_report(std::string_view text);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

} // namespace glow
