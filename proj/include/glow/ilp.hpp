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

// Bounded integer linear programs: model, branch-and-bound solver,
// exhaustive oracle and LP-format export.

#pragma once

#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace glow::ilp {

enum class Sense { less_equal, equal, greater_equal };

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  bool integer = true;
};

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::less_equal;
  double rhs = 0.0;
};

/// Minimisation model over finitely bounded variables.
class Model {
public:
  /// Throws std::invalid_argument on duplicate names or bad bounds.
  int add_variable(std::string name, double lower, double upper, bool integer = true);
  int add_binary(std::string name) { return add_variable(std::move(name), 0.0, 1.0, true); }

  /// Terms naming the same variable twice are merged.
  int add_constraint(std::string name, std::vector<Term> terms, Sense sense, double rhs);

  void set_objective(int var, double coef);

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }
  const std::vector<double>& objective() const { return obj_; }
  int variable_count() const { return static_cast<int>(vars_.size()); }

  /// Index of a variable by name, or -1.
  int find(const std::string& name) const;

  double evaluate(std::span<const double> values) const;

  /// Bounds, integrality and every row within `tol` (scaled by row size).
  bool is_feasible(std::span<const double> values, double tol = 1e-9) const;

  /// Throws std::invalid_argument when a row references an unknown variable
  /// or a bound is not finite.
  void validate() const;

private:
  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
  std::vector<double> obj_;
  std::unordered_map<std::string, int> index_;
};

enum class Status { optimal, infeasible, timeout };

const char* to_string(Status s);

struct SolveOptions {
  double time_limit_s = std::numeric_limits<double>::infinity();
  long long node_limit = std::numeric_limits<long long>::max();
  bool parallel = true;  // OpenMP pivot kernel
};

struct SolveResult {
  Status status = Status::infeasible;
  bool has_solution = false;
  std::vector<double> values;
  double objective = std::numeric_limits<double>::infinity();
  double root_bound = -std::numeric_limits<double>::infinity();  // LP relaxation at the root
  long long nodes = 0;
  long long lp_iterations = 0;
};

inline constexpr double kIntegralityTol = 1e-6;
inline constexpr double kObjectiveRelTol = 1e-9;

/// Depth-first branch and bound with an LP-relaxation bound and bound
/// propagation. Branches on the lowest-index fractional variable, down
/// branch first. Returns the best incumbent on timeout.
SolveResult solve(const Model& m, const SolveOptions& opt = {});

/// Exhaustive enumeration with forward checking; no relaxation, no
/// objective pruning. Throws std::length_error past 2^24 leaves.
SolveResult brute_force(const Model& m);
SolveResult brute_force_serial(const Model& m);

inline constexpr long long kBruteForceLeafLimit = 1LL << 24;

/// CPLEX-style LP text (Minimize / Subject To / Bounds / Binaries / Generals).
std::string export_lp(const Model& m);

} // namespace glow::ilp
