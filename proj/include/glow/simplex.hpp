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

// Dense bounded-variable simplex used for LP relaxations inside
// branch and bound. Primal two-phase for the root, dual simplex to
// re-optimise after bound changes.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "glow/ilp.hpp"

namespace glow::ilp {

/// Gauss-Jordan pivot of a row-major `rows` x `cols` tableau on
/// (pivot_row, pivot_col), also eliminating the pivot column from
/// `cost_row`. Rows are updated across OpenMP threads.
void pivot_tableau(std::span<double> tab, int rows, int cols, int pivot_row, int pivot_col,
                   std::span<double> cost_row);

/// Single-threaded reference of pivot_tableau; bitwise-identical result.
void pivot_tableau_serial(std::span<double> tab, int rows, int cols, int pivot_row,
                          int pivot_col, std::span<double> cost_row);

enum class LpStatus { optimal, infeasible, iteration_limit };

class LpTableau {
public:
  /// Relaxation of `m` with structural bounds overridden by lower/upper.
  LpTableau(const Model& m, std::span<const double> lower, std::span<const double> upper,
            bool parallel = true);

  /// Two-phase primal simplex from the slack/artificial basis.
  LpStatus solve_primal();

  /// Tightens structural bounds, keeping the basis (stays dual feasible).
  void set_bounds(std::span<const double> lower, std::span<const double> upper);

  /// Dual simplex from the current (dual feasible) basis.
  LpStatus solve_dual();

  double objective() const;
  std::vector<double> structural_values() const;
  long long iterations() const { return iterations_; }

private:
  enum class State : std::uint8_t { basic, at_lower, at_upper };

  double& cell(int r, int c) { return tab_[static_cast<size_t>(r) * cols_ + c]; }
  double cell(int r, int c) const { return tab_[static_cast<size_t>(r) * cols_ + c]; }
  double nonbasic_value(int j) const {
    return state_[j] == State::at_upper ? upper_[j] : lower_[j];
  }
  void pivot(int r, int q);
  void recompute_reduced_costs();
  LpStatus run_primal();
  void drop_artificials();

  int rows_ = 0;
  int cols_ = 0;
  int structural_ = 0;
  int artificial_begin_ = 0;
  bool parallel_ = true;
  bool infeasible_rows_ = false;

  std::vector<double> tab_;
  std::vector<double> beta_;  // basic variable values, per row
  std::vector<double> d_;     // reduced costs
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<int> basis_;    // column basic in each row
  std::vector<int> row_of_;   // row of a basic column, -1 otherwise
  std::vector<State> state_;
  std::vector<double> phase2_cost_;
  long long iterations_ = 0;
};

} // namespace glow::ilp
