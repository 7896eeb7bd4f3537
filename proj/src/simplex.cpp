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

#include "glow/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

namespace glow::ilp {

namespace {

constexpr double kPrimalTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
// Below this many tableau cells the fork/join costs more than the update.
constexpr long long kParallelCells = 1 << 15;
// Consecutive degenerate steps before switching to Bland's rule.
constexpr int kBlandAfter = 50;

// Pivot rows stay sparse on these models, so only their nonzeros are swept.
inline void eliminate_row(double* row, const double* pivot_row, double factor,
                          const std::vector<int>& nz) {
  for (int c : nz) {
    row[c] -= factor * pivot_row[c];
  }
}

inline std::vector<int> scale_pivot_row(double* pr, int cols, int pivot_col) {
  const double inv = 1.0 / pr[pivot_col];
  std::vector<int> nz;
  for (int c = 0; c < cols; ++c) {
    if (pr[c] != 0.0) {
      pr[c] *= inv;
      nz.push_back(c);
    }
  }
  pr[pivot_col] = 1.0;
  return nz;
}

} // namespace

void pivot_tableau(std::span<double> tab, int rows, int cols, int pivot_row, int pivot_col,
                   std::span<double> cost_row) {
  double* pr = tab.data() + static_cast<size_t>(pivot_row) * cols;
  const std::vector<int> nz = scale_pivot_row(pr, cols, pivot_col);
#pragma omp parallel for schedule(static) if (static_cast<long long>(rows) * cols >= kParallelCells)
  for (int r = 0; r < rows; ++r) {
    if (r == pivot_row) {
      continue;
    }
    double* row = tab.data() + static_cast<size_t>(r) * cols;
    const double f = row[pivot_col];
    if (f != 0.0) {
      eliminate_row(row, pr, f, nz);
      row[pivot_col] = 0.0;
    }
  }
  const double f = cost_row[pivot_col];
  if (f != 0.0) {
    eliminate_row(cost_row.data(), pr, f, nz);
    cost_row[pivot_col] = 0.0;
  }
}

void pivot_tableau_serial(std::span<double> tab, int rows, int cols, int pivot_row,
                          int pivot_col, std::span<double> cost_row) {
  double* pr = tab.data() + static_cast<size_t>(pivot_row) * cols;
  const std::vector<int> nz = scale_pivot_row(pr, cols, pivot_col);
  for (int r = 0; r < rows; ++r) {
    if (r == pivot_row) {
      continue;
    }
    double* row = tab.data() + static_cast<size_t>(r) * cols;
    const double f = row[pivot_col];
    if (f != 0.0) {
      eliminate_row(row, pr, f, nz);
      row[pivot_col] = 0.0;
    }
  }
  const double f = cost_row[pivot_col];
  if (f != 0.0) {
    eliminate_row(cost_row.data(), pr, f, nz);
    cost_row[pivot_col] = 0.0;
  }
}

LpTableau::LpTableau(const Model& m, std::span<const double> lower,
                     std::span<const double> upper, bool parallel)
  : parallel_(parallel) {
  const auto& rows = m.constraints();
  rows_ = static_cast<int>(rows.size());
  structural_ = m.variable_count();
  const int n = structural_;

  // Slack s_i with a_i x + s_i = b_i. Sense fixes the sign of s_i; activity
  // bounds over the box make the other side finite.
  std::vector<double> s_lo(rows_), s_hi(rows_), start_x(lower.begin(), lower.end());
  std::vector<double> residual(rows_), slack_value(rows_);
  std::vector<bool> slack_basic(rows_);
  int artificials = 0;
  for (int i = 0; i < rows_; ++i) {
    const auto& row = rows[i];
    double min_act = 0.0, max_act = 0.0, act0 = 0.0;
    for (const Term& t : row.terms) {
      const double lo = t.coef * lower[t.var], hi = t.coef * upper[t.var];
      min_act += std::min(lo, hi);
      max_act += std::max(lo, hi);
      act0 += t.coef * start_x[t.var];
    }
    const double free_lo = row.rhs - max_act, free_hi = row.rhs - min_act;
    switch (row.sense) {
      case Sense::less_equal: s_lo[i] = 0.0; s_hi[i] = free_hi; break;
      case Sense::greater_equal: s_lo[i] = free_lo; s_hi[i] = 0.0; break;
      case Sense::equal: s_lo[i] = 0.0; s_hi[i] = 0.0; break;
    }
    if (s_hi[i] < s_lo[i] - kPrimalTol) {
      infeasible_rows_ = true;
    }
    s_hi[i] = std::max(s_hi[i], s_lo[i]);
    const double want = row.rhs - act0;
    if (want >= s_lo[i] - kPrimalTol && want <= s_hi[i] + kPrimalTol) {
      slack_basic[i] = true;
      slack_value[i] = std::clamp(want, s_lo[i], s_hi[i]);
      residual[i] = 0.0;
    } else {
      slack_basic[i] = false;
      slack_value[i] = want < s_lo[i] ? s_lo[i] : s_hi[i];
      residual[i] = want - slack_value[i];
      ++artificials;
    }
  }

  artificial_begin_ = n + rows_;
  cols_ = n + rows_ + artificials;
  tab_.assign(static_cast<size_t>(rows_) * cols_, 0.0);
  beta_.assign(rows_, 0.0);
  basis_.assign(rows_, -1);
  lower_.assign(cols_, 0.0);
  upper_.assign(cols_, 0.0);
  cost_.assign(cols_, 0.0);
  phase2_cost_.assign(cols_, 0.0);
  state_.assign(cols_, State::at_lower);
  row_of_.assign(cols_, -1);

  for (int j = 0; j < n; ++j) {
    lower_[j] = lower[j];
    upper_[j] = upper[j];
    phase2_cost_[j] = m.objective()[j];
  }
  int art = artificial_begin_;
  for (int i = 0; i < rows_; ++i) {
    const int s = n + i;
    lower_[s] = s_lo[i];
    upper_[s] = s_hi[i];
    double sign = 1.0;
    if (!slack_basic[i]) {
      sign = residual[i] >= 0.0 ? 1.0 : -1.0;
    }
    for (const Term& t : rows[i].terms) {
      cell(i, t.var) += sign * t.coef;
    }
    cell(i, s) = sign;
    if (slack_basic[i]) {
      basis_[i] = s;
      beta_[i] = slack_value[i];
    } else {
      state_[s] = slack_value[i] == s_lo[i] ? State::at_lower : State::at_upper;
      cell(i, art) = 1.0;
      lower_[art] = 0.0;
      upper_[art] = std::abs(residual[i]);
      cost_[art] = 1.0;
      basis_[i] = art;
      beta_[i] = std::abs(residual[i]);
      ++art;
    }
  }
  for (int i = 0; i < rows_; ++i) {
    state_[basis_[i]] = State::basic;
    row_of_[basis_[i]] = i;
  }
  d_.assign(cols_, 0.0);
}

void LpTableau::pivot(int r, int q) {
  if (parallel_) {
    pivot_tableau(tab_, rows_, cols_, r, q, d_);
  } else {
    pivot_tableau_serial(tab_, rows_, cols_, r, q, d_);
  }
  const int leaving = basis_[r];
  row_of_[leaving] = -1;
  basis_[r] = q;
  row_of_[q] = r;
  state_[q] = State::basic;
}

void LpTableau::recompute_reduced_costs() {
  d_ = cost_;
  for (int i = 0; i < rows_; ++i) {
    const double cb = cost_[basis_[i]];
    if (cb == 0.0) {
      continue;
    }
    const double* row = tab_.data() + static_cast<size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) {
      d_[j] -= cb * row[j];
    }
  }
  for (int i = 0; i < rows_; ++i) {
    d_[basis_[i]] = 0.0;
  }
}

double LpTableau::objective() const {
  double z = 0.0;
  for (int j = 0; j < cols_; ++j) {
    if (cost_[j] == 0.0) {
      continue;
    }
    z += cost_[j] * (state_[j] == State::basic ? beta_[row_of_[j]] : nonbasic_value(j));
  }
  return z;
}

std::vector<double> LpTableau::structural_values() const {
  std::vector<double> x(structural_);
  for (int j = 0; j < structural_; ++j) {
    x[j] = state_[j] == State::basic ? beta_[row_of_[j]] : nonbasic_value(j);
  }
  return x;
}

LpStatus LpTableau::run_primal() {
  const long long limit = 200LL * (rows_ + cols_) + 1000;
  int degenerate_streak = 0;
  for (long long it = 0; it < limit; ++it) {
    const bool bland = degenerate_streak >= kBlandAfter;
    int q = -1;
    double best = 0.0;
    for (int j = 0; j < cols_; ++j) {
      if (state_[j] == State::basic || upper_[j] - lower_[j] <= 0.0) {
        continue;
      }
      const double dj = d_[j];
      const bool improving = (state_[j] == State::at_lower && dj < -kDualTol) ||
                             (state_[j] == State::at_upper && dj > kDualTol);
      if (!improving) {
        continue;
      }
      if (bland) {
        q = j;
        break;
      }
      if (std::abs(dj) > best) {
        best = std::abs(dj);
        q = j;
      }
    }
    if (q < 0) {
      return LpStatus::optimal;
    }
    ++iterations_;
    const double dir = state_[q] == State::at_lower ? 1.0 : -1.0;
    double step = upper_[q] - lower_[q];
    int leave = -1;
    double leave_alpha = 0.0;
    for (int i = 0; i < rows_; ++i) {
      const double alpha = cell(i, q) * dir;
      if (std::abs(alpha) < kPivotTol) {
        continue;
      }
      const int b = basis_[i];
      const double room = alpha > 0.0 ? (beta_[i] - lower_[b]) / alpha
                                      : (upper_[b] - beta_[i]) / (-alpha);
      const double limit_i = std::max(room, 0.0);
      const bool better = limit_i < step - 1e-12 ||
                          (limit_i <= step + 1e-12 && leave >= 0 &&
                           (bland ? b < basis_[leave] : std::abs(alpha) > std::abs(leave_alpha)));
      if (better) {
        step = limit_i;
        leave = i;
        leave_alpha = alpha;
      }
    }
    degenerate_streak = step <= 1e-12 ? degenerate_streak + 1 : 0;
    if (step != 0.0) {
      const double delta = dir * step;
      for (int i = 0; i < rows_; ++i) {
        const double a = cell(i, q);
        if (a != 0.0) {
          beta_[i] -= a * delta;
        }
      }
    }
    if (leave < 0) {
      state_[q] = state_[q] == State::at_lower ? State::at_upper : State::at_lower;
      continue;
    }
    const double entering_value = nonbasic_value(q) + dir * step;
    const int out = basis_[leave];
    state_[out] = leave_alpha > 0.0 ? State::at_lower : State::at_upper;
    pivot(leave, q);
    beta_[leave] = entering_value;
  }
  return LpStatus::iteration_limit;
}

void LpTableau::drop_artificials() {
  // Pivot zero-level artificials out of the basis; rows where that is
  // impossible are linearly dependent and go away.
  std::vector<bool> keep_row(rows_, true);
  for (int i = 0; i < rows_; ++i) {
    if (basis_[i] < artificial_begin_) {
      continue;
    }
    int q = -1;
    double best = kPivotTol;
    for (int j = 0; j < artificial_begin_; ++j) {
      if (state_[j] != State::basic && std::abs(cell(i, j)) > best) {
        best = std::abs(cell(i, j));
        q = j;
      }
    }
    if (q < 0) {
      keep_row[i] = false;
      continue;
    }
    const double value = nonbasic_value(q);
    state_[basis_[i]] = State::at_lower;
    pivot(i, q);
    beta_[i] = value;
  }

  const int new_cols = artificial_begin_;
  int new_rows = 0;
  for (int i = 0; i < rows_; ++i) {
    if (!keep_row[i]) {
      continue;
    }
    std::copy_n(tab_.begin() + static_cast<std::ptrdiff_t>(i) * cols_, new_cols,
                tab_.begin() + static_cast<std::ptrdiff_t>(new_rows) * new_cols);
    beta_[new_rows] = beta_[i];
    basis_[new_rows] = basis_[i];
    ++new_rows;
  }
  rows_ = new_rows;
  cols_ = new_cols;
  tab_.resize(static_cast<size_t>(rows_) * cols_);
  tab_.shrink_to_fit();
  beta_.resize(rows_);
  basis_.resize(rows_);
  lower_.resize(cols_);
  upper_.resize(cols_);
  state_.resize(cols_);
  row_of_.assign(cols_, -1);
  for (int i = 0; i < rows_; ++i) {
    row_of_[basis_[i]] = i;
  }
  d_.resize(cols_);
  phase2_cost_.resize(cols_);
}

LpStatus LpTableau::solve_primal() {
  if (infeasible_rows_) {
    return LpStatus::infeasible;
  }
  if (cols_ > artificial_begin_) {
    recompute_reduced_costs();
    const LpStatus s = run_primal();
    if (s != LpStatus::optimal) {
      return s;
    }
    double infeasibility = 0.0;
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] >= artificial_begin_) {
        infeasibility += beta_[i];
      }
    }
    for (int j = artificial_begin_; j < cols_; ++j) {
      if (state_[j] != State::basic) {
        infeasibility += nonbasic_value(j);
      }
    }
    if (infeasibility > 1e-7) {
      return LpStatus::infeasible;
    }
  }
  drop_artificials();
  cost_ = phase2_cost_;
  recompute_reduced_costs();
  return run_primal();
}

void LpTableau::set_bounds(std::span<const double> lower, std::span<const double> upper) {
  for (int j = 0; j < structural_; ++j) {
    if (lower_[j] == lower[j] && upper_[j] == upper[j]) {
      continue;
    }
    if (state_[j] == State::basic) {
      lower_[j] = lower[j];
      upper_[j] = upper[j];
      continue;
    }
    const double before = nonbasic_value(j);
    lower_[j] = lower[j];
    upper_[j] = upper[j];
    // A relaxed bound can leave the variable on the wrong side for its
    // reduced cost; rest it where the basis stays dual feasible.
    if (lower_[j] < upper_[j]) {
      if (d_[j] < -kDualTol) {
        state_[j] = State::at_upper;
      } else if (d_[j] > kDualTol) {
        state_[j] = State::at_lower;
      }
    }
    const double delta = nonbasic_value(j) - before;
    if (delta != 0.0) {
      for (int i = 0; i < rows_; ++i) {
        const double a = cell(i, j);
        if (a != 0.0) {
          beta_[i] -= a * delta;
        }
      }
    }
  }
}

LpStatus LpTableau::solve_dual() {
  const long long limit = 200LL * (rows_ + cols_) + 1000;
  int degenerate_streak = 0;
  for (long long it = 0; it < limit; ++it) {
    // Bland: the lowest-index infeasible basic leaves, the lowest-index
    // column among ratio ties enters.
    const bool bland = degenerate_streak >= kBlandAfter;
    int r = -1;
    double worst = kPrimalTol;
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[i];
      const double v = std::max(lower_[b] - beta_[i], beta_[i] - upper_[b]);
      if (v <= kPrimalTol) {
        continue;
      }
      if (bland ? (r < 0 || b < basis_[r]) : v > worst) {
        worst = v;
        r = i;
      }
    }
    if (r < 0) {
      return LpStatus::optimal;
    }
    ++iterations_;
    const int out = basis_[r];
    const bool raise = beta_[r] < lower_[out];
    const double target = raise ? lower_[out] : upper_[out];
    int q = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    double best_alpha = 0.0;
    for (int j = 0; j < cols_; ++j) {
      if (state_[j] == State::basic || upper_[j] - lower_[j] <= 0.0) {
        continue;
      }
      const double a = cell(r, j);
      if (std::abs(a) < kPivotTol) {
        continue;
      }
      // x_out moves by -a * dx_j; at_lower vars may only rise, at_upper fall.
      const bool up_move = state_[j] == State::at_lower;
      const bool helps = raise ? (up_move ? a < 0.0 : a > 0.0) : (up_move ? a > 0.0 : a < 0.0);
      if (!helps) {
        continue;
      }
      const double ratio = std::max(up_move ? d_[j] : -d_[j], 0.0) / std::abs(a);
      const bool tie = ratio <= best_ratio + 1e-12;
      if (ratio < best_ratio - 1e-12 || (tie && !bland && std::abs(a) > std::abs(best_alpha))) {
        best_ratio = ratio;
        best_alpha = a;
        q = j;
      }
    }
    if (q < 0) {
      return LpStatus::infeasible;
    }
    degenerate_streak = best_ratio <= 1e-12 ? degenerate_streak + 1 : 0;
    const double delta = (beta_[r] - target) / cell(r, q);
    const double entering_value = nonbasic_value(q) + delta;
    for (int i = 0; i < rows_; ++i) {
      const double a = cell(i, q);
      if (a != 0.0) {
        beta_[i] -= a * delta;
      }
    }
    state_[out] = raise ? State::at_lower : State::at_upper;
    pivot(r, q);
    beta_[r] = entering_value;
  }
  return LpStatus::iteration_limit;
}

} // namespace glow::ilp
