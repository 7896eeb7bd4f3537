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

#include "glow/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "glow/errors.hpp"

namespace glow {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

/// One logical line split into whitespace tokens, comments stripped.
struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      if (i > start) {
        line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
      }
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return lines;
}

double to_double(const Token& tok, int line) {
  double v = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (*first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParseError("expected a number, got '" + std::string(tok.text) + "'", line, tok.column);
  }
  return v;
}

long long to_integer(const Token& tok, int line) {
  long long v = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer, got '" + std::string(tok.text) + "'", line, tok.column);
  }
  return v;
}

void expect_arity(const Line& line, size_t n, std::string_view keyword) {
  if (line.tokens.size() != n) {
    const Token& at = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
    throw ParseError("'" + std::string(keyword) + "' takes " + std::to_string(n - 1) +
                       " arguments, got " + std::to_string(line.tokens.size() - 1),
                     line.number, at.column);
  }
}

void expect_keyword(const Line& line, std::string_view keyword) {
  if (line.tokens.front().text != keyword) {
    throw ParseError("expected '" + std::string(keyword) + "', got '" +
                       std::string(line.tokens.front().text) + "'",
                     line.number, line.tokens.front().column);
  }
}

} // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------- netlist

Netlist parse_netlist(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("empty netlist", 1, 1);
  }
  Netlist netlist;
  const Line& header = lines.front();
  expect_keyword(header, "chip");
  expect_arity(header, 3, "chip");
  netlist.chip_width = to_double(header.tokens[1], header.number);
  netlist.chip_height = to_double(header.tokens[2], header.number);
  if (!(netlist.chip_width > 0.0) || !(netlist.chip_height > 0.0)) {
    throw ParseError("chip dimensions must be positive", header.number, header.tokens[1].column);
  }

  std::set<int> seen_ids;
  size_t i = 1;
  while (i < lines.size()) {
    const Line& nl = lines[i++];
    expect_keyword(nl, "net");
    expect_arity(nl, 4, "net");
    Net net;
    const long long id = to_integer(nl.tokens[1], nl.number);
    const long long npins = to_integer(nl.tokens[2], nl.number);
    const long long driver = to_integer(nl.tokens[3], nl.number);
    if (id < 0 || id > std::numeric_limits<int>::max()) {
      throw ParseError("net id out of range", nl.number, nl.tokens[1].column);
    }
    if (!seen_ids.insert(static_cast<int>(id)).second) {
      throw ParseError("duplicate net id " + std::to_string(id), nl.number, nl.tokens[1].column);
    }
    if (npins < 2 || npins > 1'000'000) {
      throw ParseError("a net needs at least 2 pins", nl.number, nl.tokens[2].column);
    }
    if (driver < 0 || driver >= npins) {
      throw ParseError("driver index outside the pin list", nl.number, nl.tokens[3].column);
    }
    net.id = static_cast<int>(id);
    net.driver = static_cast<int>(driver);
    for (long long p = 0; p < npins; ++p) {
      if (i >= lines.size()) {
        throw ParseError("net " + std::to_string(id) + " ends after " + std::to_string(p) +
                           " of " + std::to_string(npins) + " pins",
                         nl.number, nl.tokens[2].column);
      }
      const Line& pl = lines[i++];
      expect_keyword(pl, "pin");
      expect_arity(pl, 3, "pin");
      Point pt{to_double(pl.tokens[1], pl.number), to_double(pl.tokens[2], pl.number)};
      if (pt.x < 0.0 || pt.x > netlist.chip_width) {
        throw ParseError("pin x outside the chip", pl.number, pl.tokens[1].column);
      }
      if (pt.y < 0.0 || pt.y > netlist.chip_height) {
        throw ParseError("pin y outside the chip", pl.number, pl.tokens[2].column);
      }
      net.pins.push_back(pt);
    }
    netlist.nets.push_back(std::move(net));
  }
  return netlist;
}

std::string write_netlist(const Netlist& netlist) {
  std::ostringstream os;
  os << "chip " << format_double(netlist.chip_width) << ' ' << format_double(netlist.chip_height)
     << '\n';
  for (const Net& net : netlist.nets) {
    os << "net " << net.id << ' ' << net.pins.size() << ' ' << net.driver << '\n';
    for (const Point& p : net.pins) {
      os << "pin " << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- thermal

ThermalProfile::ThermalProfile(int cols, int rows, double tile_mm, std::vector<double> values)
  : cols_(cols), rows_(rows), tile_(tile_mm), values_(std::move(values)) {
  if (cols_ <= 0 || rows_ <= 0 || !(tile_ > 0.0) ||
      values_.size() != static_cast<size_t>(cols_) * rows_) {
    throw std::invalid_argument("thermal grid shape mismatch");
  }
}

ThermalProfile ThermalProfile::zero(double width, double height, double tile_mm) {
  const int cols = std::max(1, static_cast<int>(std::ceil(width / tile_mm)));
  const int rows = std::max(1, static_cast<int>(std::ceil(height / tile_mm)));
  return ThermalProfile(cols, rows, tile_mm, std::vector<double>(static_cast<size_t>(cols) * rows));
}

int ThermalProfile::col_of(double x) const {
  return std::clamp(static_cast<int>(std::floor(x / tile_)), 0, cols_ - 1);
}

int ThermalProfile::row_of(double y) const {
  return std::clamp(static_cast<int>(std::floor(y / tile_)), 0, rows_ - 1);
}

double ThermalProfile::at(const Point& p) const { return at_tile(col_of(p.x), row_of(p.y)); }

bool ThermalProfile::covers(double width, double height) const {
  return cols_ * tile_ >= width && rows_ * tile_ >= height;
}

double ThermalProfile::max_along(const Point& a, const Point& b) const {
  // A segment ending exactly on a tile edge does not enter the next tile.
  auto span = [this](double lo, double hi, auto index_of) {
    int first = index_of(lo);
    int last = index_of(hi);
    if (hi > lo && last > first && hi == last * tile_) {
      --last;
    }
    return std::pair{first, last};
  };
  const auto [c0, c1] = span(std::min(a.x, b.x), std::max(a.x, b.x),
                             [this](double v) { return col_of(v); });
  const auto [r0, r1] = span(std::min(a.y, b.y), std::max(a.y, b.y),
                             [this](double v) { return row_of(v); });
  double best = 0.0;
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      best = std::max(best, at_tile(c, r));
    }
  }
  return best;
}

double ThermalProfile::integral_along(const Point& a, const Point& b) const {
  const bool horizontal = a.y == b.y;
  if (!horizontal && a.x != b.x) {
    throw std::invalid_argument("integral_along needs an axis-aligned segment");
  }
  const double lo = horizontal ? std::min(a.x, b.x) : std::min(a.y, b.y);
  const double hi = horizontal ? std::max(a.x, b.x) : std::max(a.y, b.y);
  const int fixed = horizontal ? row_of(a.y) : col_of(a.x);
  const int count = horizontal ? cols_ : rows_;
  double sum = 0.0;
  for (int k = 0; k < count; ++k) {
    const double t0 = k * tile_;
    const double t1 = (k == count - 1) ? std::max(hi, (k + 1) * tile_) : (k + 1) * tile_;
    const double overlap = std::min(hi, t1) - std::max(lo, t0);
    if (overlap > 0.0) {
      sum += overlap * (horizontal ? at_tile(k, fixed) : at_tile(fixed, k));
    }
  }
  return sum;
}

ThermalProfile parse_thermal(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("empty thermal file", 1, 1);
  }
  const Line& header = lines.front();
  expect_keyword(header, "grid");
  expect_arity(header, 4, "grid");
  const long long cols = to_integer(header.tokens[1], header.number);
  const long long rows = to_integer(header.tokens[2], header.number);
  const double tile = to_double(header.tokens[3], header.number);
  if (cols <= 0 || cols > 100000) {
    throw ParseError("grid needs a positive column count", header.number, header.tokens[1].column);
  }
  if (rows <= 0 || rows > 100000) {
    throw ParseError("grid needs a positive row count", header.number, header.tokens[2].column);
  }
  if (!(tile > 0.0)) {
    throw ParseError("tile size must be positive", header.number, header.tokens[3].column);
  }
  if (lines.size() - 1 != static_cast<size_t>(rows)) {
    const Line& at = lines.size() > 1 ? lines.back() : header;
    throw ParseError("expected " + std::to_string(rows) + " grid rows, found " +
                       std::to_string(lines.size() - 1),
                     at.number, 1);
  }
  std::vector<double> values;
  values.reserve(static_cast<size_t>(cols * rows));
  for (size_t r = 1; r < lines.size(); ++r) {
    const Line& row = lines[r];
    if (row.tokens.size() != static_cast<size_t>(cols)) {
      throw ParseError("non-rectangular grid: expected " + std::to_string(cols) + " values, got " +
                         std::to_string(row.tokens.size()),
                       row.number, row.tokens.back().column);
    }
    for (const Token& tok : row.tokens) {
      const double v = to_double(tok, row.number);
      if (v < 0.0) {
        throw ParseError("temperature variation must be >= 0", row.number, tok.column);
      }
      values.push_back(v);
    }
  }
  return ThermalProfile(static_cast<int>(cols), static_cast<int>(rows), tile, std::move(values));
}

std::string write_thermal(const ThermalProfile& profile) {
  std::ostringstream os;
  os << "grid " << profile.cols() << ' ' << profile.rows() << ' ' << format_double(profile.tile())
     << '\n';
  for (int r = 0; r < profile.rows(); ++r) {
    for (int c = 0; c < profile.cols(); ++c) {
      os << (c ? " " : "") << format_double(profile.at_tile(c, r));
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- config

namespace {

using DoubleField = double DeviceModels::*;

const std::vector<std::pair<std::string_view, DoubleField>>& model_fields() {
  static const std::vector<std::pair<std::string_view, DoubleField>> fields = {
    {"tau_o", &DeviceModels::tau_o},
    {"tau_e", &DeviceModels::tau_e},
    {"tau_conv", &DeviceModels::tau_conv},
    {"alpha_wg", &DeviceModels::alpha_wg},
    {"loss_mod_db", &DeviceModels::loss_mod_db},
    {"p_det_sense", &DeviceModels::p_det_sense},
    {"p_channel", &DeviceModels::p_channel},
    {"p_trunk_base", &DeviceModels::p_trunk_base},
    {"p_cross_unit", &DeviceModels::p_cross_unit},
    {"k_trunk_thm", &DeviceModels::k_trunk_thm},
    {"k_ring_thm", &DeviceModels::k_ring_thm},
    {"lambda0", &DeviceModels::lambda0},
    {"drift_sens", &DeviceModels::drift_sens},
    {"channel_spacing", &DeviceModels::channel_spacing},
    {"q_nominal", &DeviceModels::q_nominal},
    {"temp_threshold", &DeviceModels::temp_threshold},
    {"p_laser_max", &DeviceModels::p_laser_max},
  };
  return fields;
}

} // namespace

void Config::validate() const {
  models.validate();
  if (c_max < 1) {
    throw ModelError("c_max must be >= 1");
  }
  if (max_placement_revisions < 0) {
    throw ModelError("max_placement_revisions must be >= 0");
  }
  if (!(min_ring_pitch >= 0.0) || !std::isfinite(min_ring_pitch)) {
    throw ModelError("min_ring_pitch must be >= 0");
  }
}

Config parse_config(std::string_view text) {
  Config cfg;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const auto first = raw.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto eq = raw.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected 'key = value'", line_no, static_cast<int>(first) + 1);
      }
      auto trim = [](std::string_view s, size_t& offset) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) {
          offset += s.size();
          return std::string_view{};
        }
        const auto e = s.find_last_not_of(" \t\r");
        offset += b;
        return s.substr(b, e - b + 1);
      };
      size_t key_col = 0;
      size_t val_col = eq + 1;
      const std::string_view key = trim(raw.substr(0, eq), key_col);
      const std::string_view val = trim(raw.substr(eq + 1), val_col);
      if (key.empty()) {
        throw ParseError("missing key before '='", line_no, static_cast<int>(eq) + 1);
      }
      if (val.empty()) {
        throw ParseError("missing value for key '" + std::string(key) + "'", line_no,
                         static_cast<int>(val_col) + 1);
      }
      const Token tok{val, static_cast<int>(val_col) + 1};
      bool known = false;
      for (const auto& [name, field] : model_fields()) {
        if (name == key) {
          cfg.models.*field = to_double(tok, line_no);
          known = true;
          break;
        }
      }
      if (!known) {
        if (key == "c_max") {
          const long long v = to_integer(tok, line_no);
          if (v < 1 || v > std::numeric_limits<int>::max()) {
            throw ParseError("c_max must be >= 1", line_no, tok.column);
          }
          cfg.c_max = static_cast<int>(v);
        } else if (key == "max_placement_revisions") {
          const long long v = to_integer(tok, line_no);
          if (v < 0 || v > 1000) {
            throw ParseError("max_placement_revisions must be in [0, 1000]", line_no, tok.column);
          }
          cfg.max_placement_revisions = static_cast<int>(v);
        } else if (key == "seed") {
          const long long v = to_integer(tok, line_no);
          cfg.seed = static_cast<std::uint64_t>(v);
        } else if (key == "min_ring_pitch") {
          cfg.min_ring_pitch = to_double(tok, line_no);
        } else {
          throw ParseError("unknown config key '" + std::string(key) + "'", line_no,
                           static_cast<int>(key_col) + 1);
        }
      }
    }
    if (end == text.size()) {
      break;
    }
  }
  try {
    cfg.validate();
  } catch (const ModelError& e) {
    throw ParseError(std::string("invalid configuration: ") + e.what(), line_no, 1);
  }
  return cfg;
}

std::string write_config(const Config& config) {
  std::ostringstream os;
  for (const auto& [name, field] : model_fields()) {
    os << name << " = " << format_double(config.models.*field) << '\n';
  }
  os << "c_max = " << config.c_max << '\n';
  os << "max_placement_revisions = " << config.max_placement_revisions << '\n';
  os << "seed = " << config.seed << '\n';
  os << "min_ring_pitch = " << format_double(config.min_ring_pitch) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- report

std::string write_report(const PowerReport& r) {
  nlohmann::ordered_json j;
  j["trunks"] = r.trunk_count;
  j["channels"] = r.channel_count;
  j["avg_channels_per_trunk"] = r.avg_channels_per_trunk;
  j["total_trunk_length_mm"] = r.total_trunk_length_mm;
  nlohmann::ordered_json p;
  p["p_cross"] = r.p_cross;
  p["p_trunk_thm"] = r.p_trunk_thm;
  p["p_ring_thm"] = r.p_ring_thm;
  p["p_path"] = r.p_path;
  p["p_dynamic"] = r.p_dynamic;
  p["p_total"] = r.p_total;
  j["power"] = std::move(p);
  return j.dump(2) + "\n";
}

PowerReport parse_report(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; map it onto line/column.
    const size_t offset = std::min(e.byte, text.size());
    int line = 1, col = 1;
    for (size_t k = 0; k + 1 < offset; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed report JSON", line, col);
  }
  try {
    PowerReport r;
    r.trunk_count = j.at("trunks").get<int>();
    r.channel_count = j.at("channels").get<int>();
    r.avg_channels_per_trunk = j.at("avg_channels_per_trunk").get<double>();
    r.total_trunk_length_mm = j.at("total_trunk_length_mm").get<double>();
    const auto& p = j.at("power");
    r.p_cross = p.at("p_cross").get<double>();
    r.p_trunk_thm = p.at("p_trunk_thm").get<double>();
    r.p_ring_thm = p.at("p_ring_thm").get<double>();
    r.p_path = p.at("p_path").get<double>();
    r.p_dynamic = p.at("p_dynamic").get<double>();
    r.p_total = p.at("p_total").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report field error: ") + e.what(), 1, 1);
  }
}

} // namespace glow
