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

#include "glow/ilp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>

#include "glow/simplex.hpp"

namespace glow::ilp {

// ---------------------------------------------------------------- model

int Model::add_variable(std::string name, double lower, double upper, bool integer) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower > upper) {
    throw std::invalid_argument("variable '" + name + "' needs finite bounds lower <= upper");
  }
  if (index_.count(name)) {
    throw std::invalid_argument("duplicate variable name '" + name + "'");
  }
  const int id = static_cast<int>(vars_.size());
  index_.emplace(name, id);
  vars_.push_back({std::move(name), lower, upper, integer});
  obj_.push_back(0.0);
  return id;
}

int Model::add_constraint(std::string name, std::vector<Term> terms, Sense sense, double rhs) {
  std::map<int, double> merged;
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= variable_count()) {
      throw std::invalid_argument("constraint '" + name + "' references an unknown variable");
    }
    merged[t.var] += t.coef;
  }
  std::vector<Term> clean;
  for (const auto& [v, c] : merged) {
    if (c != 0.0) {
      clean.push_back({v, c});
    }
  }
  rows_.push_back({std::move(name), std::move(clean), sense, rhs});
  return static_cast<int>(rows_.size()) - 1;
}

void Model::set_objective(int var, double coef) {
  if (var < 0 || var >= variable_count()) {
    throw std::invalid_argument("objective references an unknown variable");
  }
  obj_[var] = coef;
}

int Model::find(const std::string& name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

double Model::evaluate(std::span<const double> values) const {
  double z = 0.0;
  for (size_t j = 0; j < obj_.size(); ++j) {
    z += obj_[j] * values[j];
  }
  return z;
}

bool Model::is_feasible(std::span<const double> values, double tol) const {
  if (values.size() != vars_.size()) {
    return false;
  }
  for (size_t j = 0; j < vars_.size(); ++j) {
    const auto& v = vars_[j];
    if (values[j] < v.lower - tol || values[j] > v.upper + tol) {
      return false;
    }
    if (v.integer && std::abs(values[j] - std::round(values[j])) > tol) {
      return false;
    }
  }
  for (const auto& row : rows_) {
    double act = 0.0, scale = std::abs(row.rhs);
    for (const Term& t : row.terms) {
      act += t.coef * values[t.var];
      scale = std::max(scale, std::abs(t.coef * values[t.var]));
    }
    const double slack = tol * std::max(1.0, scale);
    const bool ok = row.sense == Sense::less_equal      ? act <= row.rhs + slack
                    : row.sense == Sense::greater_equal ? act >= row.rhs - slack
                                                        : std::abs(act - row.rhs) <= slack;
    if (!ok) {
      return false;
    }
  }
  return true;
}

void Model::validate() const {
  for (const auto& v : vars_) {
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper) || v.lower > v.upper) {
      throw std::invalid_argument("variable '" + v.name + "' has invalid bounds");
    }
  }
  for (const auto& row : rows_) {
    if (!std::isfinite(row.rhs)) {
      throw std::invalid_argument("constraint '" + row.name + "' has a non-finite rhs");
    }
    for (const Term& t : row.terms) {
      if (t.var < 0 || t.var >= variable_count() || !std::isfinite(t.coef)) {
        throw std::invalid_argument("constraint '" + row.name + "' is malformed");
      }
    }
  }
}

const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::timeout: return "timeout";
  }
  return "unknown";
}

// ---------------------------------------------------------------- solver

namespace {

constexpr double kBoundEps = 1e-9;

/// Activity-based bound tightening with integer rounding. Returns false when
/// the box becomes empty or a row cannot be satisfied.
bool propagate(const Model& m, std::vector<double>& lo, std::vector<double>& hi) {
  const auto& vars = m.variables();
  auto tighten_upper = [&](int j, double v) {
    if (vars[j].integer) {
      v = std::floor(v + kBoundEps);
    }
    if (v < hi[j] - kBoundEps) {
      hi[j] = v;
      return true;
    }
    return false;
  };
  auto tighten_lower = [&](int j, double v) {
    if (vars[j].integer) {
      v = std::ceil(v - kBoundEps);
    }
    if (v > lo[j] + kBoundEps) {
      lo[j] = v;
      return true;
    }
    return false;
  };

  for (int pass = 0; pass < 50; ++pass) {
    bool changed = false;
    for (const auto& row : m.constraints()) {
      double min_act = 0.0, max_act = 0.0;
      for (const Term& t : row.terms) {
        min_act += t.coef > 0 ? t.coef * lo[t.var] : t.coef * hi[t.var];
        max_act += t.coef > 0 ? t.coef * hi[t.var] : t.coef * lo[t.var];
      }
      const double tol = 1e-9 * std::max(1.0, std::abs(row.rhs));
      const bool has_upper = row.sense != Sense::greater_equal;
      const bool has_lower = row.sense != Sense::less_equal;
      if ((has_upper && min_act > row.rhs + tol) || (has_lower && max_act < row.rhs - tol)) {
        return false;
      }
      for (const Term& t : row.terms) {
        const double own_min = t.coef > 0 ? t.coef * lo[t.var] : t.coef * hi[t.var];
        const double own_max = t.coef > 0 ? t.coef * hi[t.var] : t.coef * lo[t.var];
        if (has_upper) {
          // coef * x <= rhs - (min_act - own_min)
          const double cap = (row.rhs - (min_act - own_min)) / t.coef;
          changed |= t.coef > 0 ? tighten_upper(t.var, cap) : tighten_lower(t.var, cap);
        }
        if (has_lower) {
          // coef * x >= rhs - (max_act - own_max)
          const double floor_v = (row.rhs - (max_act - own_max)) / t.coef;
          changed |= t.coef > 0 ? tighten_lower(t.var, floor_v) : tighten_upper(t.var, floor_v);
        }
        if (lo[t.var] > hi[t.var] + kBoundEps) {
          return false;
        }
      }
    }
    if (!changed) {
      break;
    }
  }
  for (size_t j = 0; j < lo.size(); ++j) {
    if (lo[j] > hi[j]) {
      if (lo[j] - hi[j] > kBoundEps) {
        return false;
      }
      hi[j] = lo[j];
    }
  }
  return true;
}

struct Node {
  std::vector<double> lo;
  std::vector<double> hi;
};

bool better_than(double candidate, double incumbent) {
  return candidate < incumbent - kObjectiveRelTol * std::max(1.0, std::abs(incumbent));
}

} // namespace

SolveResult solve(const Model& m, const SolveOptions& opt) {
  m.validate();
  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };
  const int n = m.variable_count();
  const auto& vars = m.variables();

  SolveResult result;
  Node root;
  root.lo.resize(n);
  root.hi.resize(n);
  for (int j = 0; j < n; ++j) {
    root.lo[j] = vars[j].integer ? std::ceil(vars[j].lower - kBoundEps) : vars[j].lower;
    root.hi[j] = vars[j].integer ? std::floor(vars[j].upper + kBoundEps) : vars[j].upper;
  }
  if (!propagate(m, root.lo, root.hi)) {
    result.status = Status::infeasible;
    return result;
  }

  LpTableau root_lp(m, root.lo, root.hi, opt.parallel);
  const LpStatus root_status = root_lp.solve_primal();
  result.lp_iterations = root_lp.iterations();
  if (root_status == LpStatus::infeasible) {
    result.status = Status::infeasible;
    return result;
  }
  if (root_status != LpStatus::optimal) {
    throw std::runtime_error("root LP relaxation did not converge");
  }
  result.root_bound = root_lp.objective();

  std::unique_ptr<LpTableau> work;
  std::vector<Node> stack;
  stack.push_back(std::move(root));
  long long next_id = 0;
  bool timed_out = false;

  while (!stack.empty()) {
    if (elapsed() > opt.time_limit_s || result.nodes >= opt.node_limit) {
      timed_out = true;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    const long long id = next_id++;
    ++result.nodes;

    LpStatus status = LpStatus::optimal;
    if (id == 0) {
      work = std::make_unique<LpTableau>(root_lp);
    } else {
      // Any optimal basis is dual feasible for any bounds, so the last
      // tableau is a valid warm start even after backtracking.
      const long long before = work->iterations();
      work->set_bounds(node.lo, node.hi);
      status = work->solve_dual();
      result.lp_iterations += work->iterations() - before;
      if (status == LpStatus::iteration_limit) {
        work = std::make_unique<LpTableau>(m, node.lo, node.hi, opt.parallel);
        status = work->solve_primal();
        result.lp_iterations += work->iterations();
        if (status == LpStatus::iteration_limit) {
          throw std::runtime_error("LP relaxation did not converge");
        }
      }
    }
    if (status == LpStatus::infeasible) {
      continue;
    }
    const double bound = work->objective();
    if (result.has_solution && !better_than(bound, result.objective)) {
      continue;
    }
    const std::vector<double> x = work->structural_values();
    int branch = -1;
    for (int j = 0; j < n; ++j) {
      if (vars[j].integer && std::abs(x[j] - std::round(x[j])) > kIntegralityTol) {
        branch = j;
        break;
      }
    }
    if (branch < 0) {
      std::vector<double> candidate = x;
      for (int j = 0; j < n; ++j) {
        if (vars[j].integer) {
          candidate[j] = std::round(candidate[j]);
        }
        candidate[j] = std::clamp(candidate[j], vars[j].lower, vars[j].upper);
      }
      if (!m.is_feasible(candidate, 1e-7)) {
        // Rounding broke a row; the LP point itself is the incumbent only
        // if all integers were already exact, which they were not.
        continue;
      }
      const double z = m.evaluate(candidate);
      if (!result.has_solution || better_than(z, result.objective)) {
        result.has_solution = true;
        result.values = std::move(candidate);
        result.objective = z;
      }
      continue;
    }
    const double v = x[branch];
    Node up{node.lo, node.hi};
    up.lo[branch] = std::ceil(v);
    Node down{std::move(node.lo), std::move(node.hi)};
    down.hi[branch] = std::floor(v);
    const bool up_ok = propagate(m, up.lo, up.hi);
    const bool down_ok = propagate(m, down.lo, down.hi);
    if (up_ok) {
      stack.push_back(std::move(up));
    }
    if (down_ok) {
      stack.push_back(std::move(down));
    }
  }

  if (timed_out) {
    result.status = Status::timeout;
  } else {
    result.status = result.has_solution ? Status::optimal : Status::infeasible;
  }
  return result;
}

} // namespace glow::ilp
