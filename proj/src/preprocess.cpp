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

#include "glow/preprocess.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include <omp.h>

namespace glow {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
};

double lower_median(std::vector<double> v) {
  const size_t mid = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  return v[mid];
}

} // namespace

std::vector<int> Dendrogram::leaves(int node) const {
  std::vector<int> out;
  std::vector<int> stack{node};
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    if (is_leaf(n)) {
      out.push_back(n);
    } else {
      stack.push_back(merge(n).left);
      stack.push_back(merge(n).right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dendrogram cluster_dendrogram(std::span<const Point> pins) {
  const int n = static_cast<int>(pins.size());
  Dendrogram d;
  d.leaf_count = n;
  if (n <= 1) {
    return d;
  }
  // Single linkage == Kruskal over all pairs; (distance, i, j) order fixes ties.
  std::vector<std::tuple<double, int, int>> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(manhattan(pins[i], pins[j]), i, j);
    }
  }
  std::sort(edges.begin(), edges.end());

  DisjointSets sets(n);
  std::vector<int> node_of(n);  // dendrogram node currently representing each set root
  std::iota(node_of.begin(), node_of.end(), 0);
  for (const auto& [dist, i, j] : edges) {
    const int ri = sets.find(i);
    const int rj = sets.find(j);
    if (ri == rj) {
      continue;
    }
    const int id = n + static_cast<int>(d.merges.size());
    d.merges.push_back({node_of[ri], node_of[rj], dist});
    sets.parent[rj] = ri;
    node_of[ri] = id;
    if (static_cast<int>(d.merges.size()) == n - 1) {
      break;
    }
  }
  return d;
}

std::vector<std::vector<int>> extract_clusters(const Dendrogram& d, double l_crit) {
  std::vector<std::vector<int>> clusters;
  if (d.leaf_count == 0) {
    return clusters;
  }
  // Depth-first from the root; a subtree whose own merge is below the cut has
  // only lower merges beneath it, so it is emitted whole.
  std::vector<int> stack{d.root()};
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    if (d.is_leaf(node) || d.merge(node).height < l_crit) {
      clusters.push_back(d.leaves(node));
    } else {
      stack.push_back(d.merge(node).right);
      stack.push_back(d.merge(node).left);
    }
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return clusters;
}

Point geometric_median(std::span<const Point> points) {
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return {lower_median(std::move(xs)), lower_median(std::move(ys))};
}

Point OpticalNet::median() const {
  std::vector<Point> pts;
  pts.reserve(sinks.size() + 1);
  pts.push_back(driver.pos);
  for (const auto& s : sinks) {
    pts.push_back(s.pos);
  }
  return geometric_median(pts);
}

int OpticalNetlist::net_index(int net_id) const {
  auto it = std::lower_bound(nets.begin(), nets.end(), net_id,
                             [](const OpticalNet& n, int id) { return n.net_id < id; });
  if (it == nets.end() || it->net_id != net_id) {
    return -1;
  }
  return static_cast<int>(it - nets.begin());
}

int OpticalNetlist::pin_max() const {
  int best = 1;
  for (const auto& n : nets) {
    best = std::max(best, n.pin_count());
  }
  return best;
}

namespace {

PseudoPin make_pseudo_pin(const Net& net, std::vector<int> members) {
  std::vector<Point> pts;
  pts.reserve(members.size());
  for (int m : members) {
    pts.push_back(net.pins[m]);
  }
  return {geometric_median(pts), std::move(members)};
}

/// Optical form of one net, or nullopt when it stays electrical.
std::optional<OpticalNet> optical_net(const Net& net, double l_crit) {
  const Dendrogram d = cluster_dendrogram(net.pins);
  auto clusters = extract_clusters(d, l_crit);
  if (clusters.size() < 2) {
    return std::nullopt;
  }
  auto driver_it = std::find_if(clusters.begin(), clusters.end(), [&](const auto& c) {
    return std::binary_search(c.begin(), c.end(), net.driver);
  });
  std::vector<int> driver_members = std::move(*driver_it);
  clusters.erase(driver_it);

  // Cluster spacing bounds pin-to-pin distance, not median-to-median distance.
  // A sink pseudo-pin that is not at least l_crit away from the driver along
  // one axis can never beat Cu on an axis-aligned trunk, so its cluster joins
  // the driver cluster and stays electrical; repeat until stable.
  PseudoPin driver = make_pseudo_pin(net, driver_members);
  for (;;) {
    std::vector<std::vector<int>> keep;
    bool absorbed = false;
    for (auto& c : clusters) {
      const PseudoPin sink = make_pseudo_pin(net, c);
      const double reach =
        std::max(std::abs(sink.pos.x - driver.pos.x), std::abs(sink.pos.y - driver.pos.y));
      if (reach < l_crit) {
        driver_members.insert(driver_members.end(), c.begin(), c.end());
        absorbed = true;
      } else {
        keep.push_back(std::move(c));
      }
    }
    clusters = std::move(keep);
    if (!absorbed) {
      break;
    }
    std::sort(driver_members.begin(), driver_members.end());
    driver = make_pseudo_pin(net, driver_members);
  }
  if (clusters.empty()) {
    return std::nullopt;
  }
  OpticalNet on;
  on.net_id = net.id;
  on.driver = std::move(driver);
  for (auto& c : clusters) {
    on.sinks.push_back(make_pseudo_pin(net, std::move(c)));
  }
  return on;
}

PreprocessResult assemble(const Netlist& netlist, std::vector<std::optional<OpticalNet>>& per_net) {
  std::vector<size_t> order(netlist.nets.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return netlist.nets[a].id < netlist.nets[b].id; });

  PreprocessResult out;
  out.optical.chip_width = netlist.chip_width;
  out.optical.chip_height = netlist.chip_height;
  for (size_t idx : order) {
    if (!per_net[idx]) {
      out.residual_nets.push_back(netlist.nets[idx].id);
      continue;
    }
    OpticalNet on = std::move(*per_net[idx]);
    for (const auto& sink : on.sinks) {
      Link link;
      link.id = static_cast<int>(out.optical.links.size());
      link.net_id = on.net_id;
      link.driver = on.driver.pos;
      link.sink = sink.pos;
      link.hpwl = manhattan(link.driver, link.sink);
      on.links.push_back(link.id);
      out.optical.links.push_back(link);
    }
    out.optical.nets.push_back(std::move(on));
  }
  return out;
}

} // namespace

PreprocessResult build_optical_netlist(const Netlist& netlist, double l_crit) {
  const auto n = static_cast<std::ptrdiff_t>(netlist.nets.size());
  std::vector<std::optional<OpticalNet>> per_net(netlist.nets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    per_net[i] = optical_net(netlist.nets[i], l_crit);
  }
  return assemble(netlist, per_net);
}

PreprocessResult build_optical_netlist_serial(const Netlist& netlist, double l_crit) {
  std::vector<std::optional<OpticalNet>> per_net;
  per_net.reserve(netlist.nets.size());
  for (const Net& net : netlist.nets) {
    per_net.push_back(optical_net(net, l_crit));
  }
  return assemble(netlist, per_net);
}

} // namespace glow
