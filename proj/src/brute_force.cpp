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

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glow/ilp.hpp"

namespace glow::ilp {
namespace {

// Integer domains as closed ranges [lo, hi].
struct Domains {
  std::vector<long long> lo;
  std::vector<long long> hi;
};

class Enumerator {
public:
  explicit Enumerator(const Model& m, std::atomic<long long>* shared_leaves = nullptr)
      : m_(m), shared_(shared_leaves) {
    for (const auto& v : m.variables()) {
      if (!v.integer) {
        throw std::invalid_argument("exhaustive search needs integer variables only ('" + v.name +
                                    "')");
      }
    }
  }

  Domains initial() const {
    Domains d;
    for (const auto& v : m_.variables()) {
      d.lo.push_back(static_cast<long long>(std::ceil(v.lower - 1e-9)));
      d.hi.push_back(static_cast<long long>(std::floor(v.upper + 1e-9)));
    }
    return d;
  }

  // Rows checked against the current domains; domains of free variables are
  // narrowed until nothing changes. False on a wipe-out.
  bool forward_check(Domains& d) const {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& row : m_.constraints()) {
        double lo_sum = 0.0, hi_sum = 0.0;
        for (const Term& t : row.terms) {
          const double a = t.coef * static_cast<double>(d.lo[t.var]);
          const double b = t.coef * static_cast<double>(d.hi[t.var]);
          lo_sum += std::min(a, b);
          hi_sum += std::max(a, b);
        }
        const double eps = 1e-9 * std::max(1.0, std::abs(row.rhs));
        const bool need_le = row.sense == Sense::less_equal || row.sense == Sense::equal;
        const bool need_ge = row.sense == Sense::greater_equal || row.sense == Sense::equal;
        if (need_le && lo_sum > row.rhs + eps) {
          return false;
        }
        if (need_ge && hi_sum < row.rhs - eps) {
          return false;
        }
        for (const Term& t : row.terms) {
          const int j = t.var;
          if (d.lo[j] == d.hi[j]) {
            continue;
          }
          const double a = t.coef * static_cast<double>(d.lo[j]);
          const double b = t.coef * static_cast<double>(d.hi[j]);
          const double rest_lo = lo_sum - std::min(a, b);
          const double rest_hi = hi_sum - std::max(a, b);
          long long new_lo = d.lo[j], new_hi = d.hi[j];
          if (need_le) {
            const double lim = (row.rhs - rest_lo) / t.coef;
            if (t.coef > 0) {
              new_hi = std::min(new_hi, static_cast<long long>(std::floor(lim + 1e-9)));
            } else {
              new_lo = std::max(new_lo, static_cast<long long>(std::ceil(lim - 1e-9)));
            }
          }
          if (need_ge) {
            const double lim = (row.rhs - rest_hi) / t.coef;
            if (t.coef > 0) {
              new_lo = std::max(new_lo, static_cast<long long>(std::ceil(lim - 1e-9)));
            } else {
              new_hi = std::min(new_hi, static_cast<long long>(std::floor(lim + 1e-9)));
            }
          }
          if (new_lo > new_hi) {
            return false;
          }
          if (new_lo != d.lo[j] || new_hi != d.hi[j]) {
            d.lo[j] = new_lo;
            d.hi[j] = new_hi;
            again = true;
          }
        }
      }
    }
    return true;
  }

  // Smallest open domain, lowest index on ties; -1 when all are fixed.
  int choose(const Domains& d) const {
    int best = -1;
    long long width = std::numeric_limits<long long>::max();
    for (size_t j = 0; j < d.lo.size(); ++j) {
      const long long w = d.hi[j] - d.lo[j];
      if (w > 0 && w < width) {
        width = w;
        best = static_cast<int>(j);
      }
    }
    return best;
  }

  void run(Domains d) {
    if (!forward_check(d)) {
      count_leaf();
      return;
    }
    const int j = choose(d);
    if (j < 0) {
      count_leaf();
      std::vector<double> x(d.lo.begin(), d.lo.end());
      if (!m_.is_feasible(x)) {
        return;
      }
      const double z = m_.evaluate(x);
      if (!found || z < best_obj) {
        found = true;
        best_obj = z;
        best = std::move(x);
      }
      return;
    }
    for (long long v = d.lo[j]; v <= d.hi[j]; ++v) {
      Domains child = d;
      child.lo[j] = child.hi[j] = v;
      run(std::move(child));
    }
  }

  // Expands the tree breadth-wise until `target` open subproblems exist
  // (in depth-first order) or nothing is left to split. Leaves reached during
  // expansion are kept as fixed subproblems so the order stays exact.
  std::vector<Domains> frontier(size_t target) {
    std::vector<Domains> open{initial()};
    for (;;) {
      if (open.size() >= target) {
        return open;
      }
      std::vector<Domains> next;
      bool split = false;
      for (Domains& d : open) {
        Domains probe = d;
        if (!forward_check(probe)) {
          next.push_back(std::move(d));
          continue;
        }
        const int j = choose(probe);
        if (j < 0) {
          next.push_back(std::move(d));
          continue;
        }
        split = true;
        for (long long v = probe.lo[j]; v <= probe.hi[j]; ++v) {
          Domains child = probe;
          child.lo[j] = child.hi[j] = v;
          next.push_back(std::move(child));
        }
      }
      open = std::move(next);
      if (!split) {
        return open;
      }
    }
  }

  bool found = false;
  double best_obj = std::numeric_limits<double>::infinity();
  std::vector<double> best;
  long long leaves = 0;

private:
  void count_leaf() {
    ++leaves;
    const long long total = shared_ ? shared_->fetch_add(1, std::memory_order_relaxed) + 1 : leaves;
    if (total > kBruteForceLeafLimit) {
      throw std::length_error("exhaustive search exceeded the leaf limit");
    }
  }

  const Model& m_;
  std::atomic<long long>* shared_;
};

SolveResult finish(bool found, double obj, std::vector<double> values, long long leaves) {
  SolveResult r;
  r.status = found ? Status::optimal : Status::infeasible;
  r.has_solution = found;
  r.objective = obj;
  r.values = std::move(values);
  r.nodes = leaves;
  return r;
}

} // namespace

SolveResult brute_force_serial(const Model& m) {
  m.validate();
  Enumerator e(m);
  e.run(e.initial());
  return finish(e.found, e.best_obj, std::move(e.best), e.leaves);
}

SolveResult brute_force(const Model& m) {
  m.validate();
  Enumerator splitter(m);
  const std::vector<Domains> subs = splitter.frontier(256);
  const long long n = static_cast<long long>(subs.size());

  std::atomic<long long> leaves{0};
  std::vector<bool> found(subs.size(), false);
  std::vector<double> obj(subs.size(), std::numeric_limits<double>::infinity());
  std::vector<std::vector<double>> values(subs.size());
  std::atomic<bool> overflow{false};

#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    if (overflow.load(std::memory_order_relaxed)) {
      continue;
    }
    try {
      Enumerator e(m, &leaves);
      e.run(subs[i]);
      found[i] = e.found;
      obj[i] = e.best_obj;
      values[i] = std::move(e.best);
    } catch (const std::length_error&) {
      overflow = true;
    }
  }
  if (overflow) {
    throw std::length_error("exhaustive search exceeded the leaf limit");
  }

  long long pick = -1;
  for (long long i = 0; i < n; ++i) {
    if (found[i] && (pick < 0 || obj[i] < obj[pick])) {
      pick = i;
    }
  }
  if (pick < 0) {
    return finish(false, std::numeric_limits<double>::infinity(), {}, leaves.load());
  }
  return finish(true, obj[pick], std::move(values[pick]), leaves.load());
}

} // namespace glow::ilp
