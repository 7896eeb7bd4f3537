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

// Netlist pre-processing: pin clustering and optical netlist extraction.

#pragma once

#include <span>
#include <vector>

#include "glow/geometry.hpp"
#include "glow/ingest.hpp"

namespace glow {

/// Single-linkage merge tree. Leaves are pin indices [0, n); internal node
/// n + k is the k-th merge. Heights are non-decreasing in merge order.
struct Dendrogram {
  struct Merge {
    int left = 0;
    int right = 0;
    double height = 0.0;  // Manhattan distance of the closest cross pair
  };

  int leaf_count = 0;
  std::vector<Merge> merges;

  int root() const { return leaf_count == 0 ? -1 : leaf_count + static_cast<int>(merges.size()) - 1; }
  bool is_leaf(int node) const { return node < leaf_count; }
  const Merge& merge(int node) const { return merges[node - leaf_count]; }

  /// Pin indices under `node`, ascending.
  std::vector<int> leaves(int node) const;
};

Dendrogram cluster_dendrogram(std::span<const Point> pins);

/// Cut at `l_crit`: maximal subtrees whose merge heights are all < l_crit.
/// Clusters are ordered by their smallest pin index.
std::vector<std::vector<int>> extract_clusters(const Dendrogram& d, double l_crit);

/// Coordinate-wise median; even counts take the lower middle value.
Point geometric_median(std::span<const Point> points);

struct PseudoPin {
  Point pos;
  std::vector<int> members;  // electrical pin indices within the net

  friend bool operator==(const PseudoPin&, const PseudoPin&) = default;
};

struct OpticalNet {
  int net_id = 0;
  PseudoPin driver;
  std::vector<PseudoPin> sinks;
  std::vector<int> links;  // link ids, one per sink

  int pin_count() const { return 1 + static_cast<int>(sinks.size()); }

  /// Per-axis median of the pseudo-pins.
  Point median() const;

  friend bool operator==(const OpticalNet&, const OpticalNet&) = default;
};

struct Link {
  int id = 0;
  int net_id = 0;
  Point driver;
  Point sink;
  double hpwl = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

struct OpticalNetlist {
  double chip_width = 0.0;
  double chip_height = 0.0;
  std::vector<OpticalNet> nets;  // ascending net_id
  std::vector<Link> links;       // links[i].id == i

  /// Index into `nets` by net id; -1 when absent.
  int net_index(int net_id) const;

  /// Largest pseudo-pin count of any optical net (at least 1).
  int pin_max() const;

  friend bool operator==(const OpticalNetlist&, const OpticalNetlist&) = default;
};

struct PreprocessResult {
  OpticalNetlist optical;
  std::vector<int> residual_nets;  // ids of nets left fully electrical
};

/// Clusters every net and keeps the ones that still span >= l_crit. Nets are
/// processed in parallel; output is ordered by net id.
PreprocessResult build_optical_netlist(const Netlist& netlist, double l_crit);

/// Single-threaded reference with identical output.
PreprocessResult build_optical_netlist_serial(const Netlist& netlist, double l_crit);

} // namespace glow
