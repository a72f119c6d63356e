// Copyright 2026 The exclear Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "exclear/error.hpp"
#include "exclear/solver.hpp"

namespace exclear {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kDropTol = 1e-13;

// Tableau simplex over columns [structural | logical | artificial]. Every
// row i owns one logical column with coefficient sign_[i]: a slack for
// inequalities, a variable fixed at zero for equalities.
class DenseSimplex {
 public:
  DenseSimplex(const MipModel& model, const LpOptions& options)
      : model_(model),
        options_(options),
        m_(model.num_constraints()),
        n_(model.num_variables()) {}

  LpOutcome solve() {
    LpOutcome out;
    if (!load_bounds()) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    build_initial_tableau();

    if (num_artificial_ > 0) {
      std::vector<double> phase1(cols_, 0.0);
      for (int j = first_artificial(); j < cols_; ++j) phase1[j] = -1.0;
      set_costs(phase1);
      if (iterate() == Result::kUnbounded) {
        throw Error(ErrorCode::kNumericalFailure, "phase 1 reported unbounded");
      }
      double infeasibility = 0.0;
      for (int j = first_artificial(); j < cols_; ++j) infeasibility += x_[j];
      if (infeasibility > options_.feasibility_tol * (1.0 + m_)) {
        out.status = LpStatus::kInfeasible;
        out.iterations = iterations_;
        return out;
      }
      drive_out_artificials();
    }

    std::vector<double> phase2(cols_, 0.0);
    for (int j = 0; j < n_; ++j) phase2[j] = model_.variable(j).objective;
    set_costs(phase2);
    Result result = iterate();
    for (int attempt = 0; result == Result::kOptimal && attempt < 3;
         ++attempt) {
      if (primal_residual() <= options_.feasibility_tol) break;
      rebuild();
      result = iterate();
    }
    if (result == Result::kUnbounded) {
      out.status = LpStatus::kUnbounded;
      out.iterations = iterations_;
      return out;
    }

    out.status = LpStatus::kOptimal;
    out.iterations = iterations_;
    out.primal.assign(x_.begin(), x_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      // Snap round-off so reported points sit inside their bounds.
      out.primal[j] = std::clamp(out.primal[j], lo_[j], up_[j]);
      out.value += cost_[j] * out.primal[j];
    }
    out.duals.resize(m_);
    for (int i = 0; i < m_; ++i) out.duals[i] = -d_[n_ + i] / sign_[i];
    out.reduced_costs.assign(d_.begin(), d_.begin() + n_);
    return out;
  }

 private:
  enum class Result { kOptimal, kUnbounded };

  int first_artificial() const { return n_ + m_; }
  double& at(int i, int j) { return tab_[static_cast<std::size_t>(i) * cols_ + j]; }
  double at(int i, int j) const {
    return tab_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool load_bounds() {
    lo_.resize(n_ + m_);
    up_.resize(n_ + m_);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = options_.lower.empty() ? model_.variable(j).lower
                                      : options_.lower.at(j);
      up_[j] = options_.upper.empty() ? model_.variable(j).upper
                                      : options_.upper.at(j);
      if (!std::isfinite(lo_[j])) {
        throw Error(ErrorCode::kBadParameter,
                    "variable " + model_.variable_name(j) +
                        " needs a finite lower bound");
      }
      if (lo_[j] > up_[j] + options_.feasibility_tol) return false;
    }
    sign_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const Sense s = model_.constraint(i).sense;
      sign_[i] = s == Sense::kGreaterEqual ? -1.0 : 1.0;
      lo_[n_ + i] = 0.0;
      up_[n_ + i] = s == Sense::kEqual ? 0.0 : kInf;
    }
    return true;
  }

  void build_initial_tableau() {
    x_.assign(n_ + m_, 0.0);
    at_upper_.assign(n_ + m_, false);
    for (int j = 0; j < n_; ++j) x_[j] = lo_[j];

    std::vector<double> residual(m_);
    std::vector<int> needs_artificial;
    for (int i = 0; i < m_; ++i) {
      const Constraint& row = model_.constraint(i);
      double r = row.rhs;
      for (const Term& t : row.terms) r -= t.coef * x_[t.var];
      residual[i] = r;
      const double slack = sign_[i] * r;
      const bool fits = row.sense == Sense::kEqual
                            ? std::fabs(r) <= options_.feasibility_tol
                            : slack >= -options_.feasibility_tol;
      if (!fits) needs_artificial.push_back(i);
    }
    num_artificial_ = static_cast<int>(needs_artificial.size());
    cols_ = n_ + m_ + num_artificial_;
    lo_.resize(cols_, 0.0);
    up_.resize(cols_, kInf);
    x_.resize(cols_, 0.0);
    at_upper_.resize(cols_, false);

    tab_.assign(static_cast<std::size_t>(m_) * cols_, 0.0);
    beta_.assign(m_, 0.0);
    basis_.assign(m_, -1);
    row_of_.assign(cols_, -1);

    std::vector<int> art_of_row(m_, -1);
    for (int a = 0; a < num_artificial_; ++a) {
      art_of_row[needs_artificial[a]] = first_artificial() + a;
    }
    for (int i = 0; i < m_; ++i) {
      const Constraint& row = model_.constraint(i);
      for (const Term& t : row.terms) at(i, t.var) = t.coef;
      at(i, n_ + i) = sign_[i];
      int basic = n_ + i;
      double coef = sign_[i];
      double value = std::max(0.0, sign_[i] * residual[i]);
      if (art_of_row[i] >= 0) {
        basic = art_of_row[i];
        coef = residual[i] >= 0 ? 1.0 : -1.0;
        at(i, basic) = coef;
        value = std::fabs(residual[i]);
      }
      if (coef < 0) {
        for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
      }
      basis_[i] = basic;
      row_of_[basic] = i;
      beta_[i] = value;
      x_[basic] = value;
    }
    original_ = tab_;
    original_rhs_.resize(m_);
    // Rows were sign-normalised above; keep the rhs consistent.
    for (int i = 0; i < m_; ++i) {
      const Constraint& row = model_.constraint(i);
      const int basic = basis_[i];
      double coef_in_model = 0.0;
      if (basic == n_ + i) {
        coef_in_model = sign_[i];
      } else {
        coef_in_model = residual[i] >= 0 ? 1.0 : -1.0;
      }
      original_rhs_[i] = coef_in_model < 0 ? -row.rhs : row.rhs;
    }
  }

  void set_costs(const std::vector<double>& cost) {
    cost_ = cost;
    d_ = cost;
    for (int i = 0; i < m_; ++i) {
      const double cb = cost_[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = &tab_[static_cast<std::size_t>(i) * cols_];
      for (int j = 0; j < cols_; ++j) d_[j] -= cb * row[j];
    }
    for (int i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
  }

  int choose_entering(bool bland, double& direction) const {
    const double tol = options_.optimality_tol;
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < cols_; ++j) {
      if (row_of_[j] >= 0 || lo_[j] == up_[j]) continue;
      double score = 0.0;
      double dir = 0.0;
      if (!at_upper_[j] && d_[j] > tol) {
        score = d_[j];
        dir = 1.0;
      } else if (at_upper_[j] && d_[j] < -tol) {
        score = -d_[j];
        dir = -1.0;
      } else {
        continue;
      }
      if (bland) {
        direction = dir;
        return j;
      }
      if (score > best_score) {
        best_score = score;
        best = j;
        direction = dir;
      }
    }
    return best;
  }

  Result iterate() {
    const long budget = 50L * (m_ + cols_) + 1000;
    const long degenerate_limit = 10L * (m_ + n_);
    long degenerate_run = 0;
    std::vector<int> nonzeros;
    nonzeros.reserve(cols_);
    for (long step = 0;; ++step) {
      if (step > budget) {
        throw Error(ErrorCode::kNumericalFailure,
                    "simplex iteration budget exhausted (" +
                        std::to_string(budget) + ")");
      }
      const bool bland = degenerate_run >= degenerate_limit;
      double dir = 0.0;
      const int q = choose_entering(bland, dir);
      if (q < 0) return Result::kOptimal;

      // Ratio test: basic i moves by delta_i * t.
      double t = up_[q] - lo_[q];
      int leave_row = -1;
      double leave_alpha = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double alpha = at(i, q);
        if (std::fabs(alpha) <= kPivotTol) continue;
        const double delta = -dir * alpha;
        const int b = basis_[i];
        double limit = kInf;
        if (delta < 0) {
          limit = std::max(0.0, beta_[i] - lo_[b]) / -delta;
        } else if (std::isfinite(up_[b])) {
          limit = std::max(0.0, up_[b] - beta_[i]) / delta;
        }
        if (limit == kInf) continue;
        bool take = false;
        if (limit < t - 1e-12) {
          take = true;
        } else if (limit <= t + 1e-12 && leave_row >= 0) {
          take = bland ? b < basis_[leave_row]
                       : std::fabs(alpha) > std::fabs(leave_alpha);
        } else if (limit <= t + 1e-12 && leave_row < 0 && !std::isfinite(t)) {
          take = true;
        }
        if (take) {
          t = limit;
          leave_row = i;
          leave_alpha = alpha;
        }
      }
      if (!std::isfinite(t)) return Result::kUnbounded;
      ++iterations_;
      degenerate_run = t <= 1e-12 ? degenerate_run + 1 : 0;

      for (int i = 0; i < m_; ++i) {
        const double alpha = at(i, q);
        if (alpha != 0.0) beta_[i] -= dir * alpha * t;
      }
      x_[q] += dir * t;

      if (leave_row < 0) {
        // Bound flip, basis unchanged.
        at_upper_[q] = dir > 0;
        x_[q] = dir > 0 ? up_[q] : lo_[q];
        sync_basic_values();
        continue;
      }

      const int leaving = basis_[leave_row];
      const double delta = -dir * leave_alpha;
      at_upper_[leaving] = delta > 0;
      x_[leaving] = delta > 0 ? up_[leaving] : lo_[leaving];
      pivot(leave_row, q, nonzeros);
      beta_[leave_row] = x_[q];
      at_upper_[q] = false;
      sync_basic_values();
    }
  }

  void sync_basic_values() {
    for (int i = 0; i < m_; ++i) x_[basis_[i]] = beta_[i];
  }

  void pivot(int r, int q, std::vector<int>& nonzeros) {
    double* prow = &tab_[static_cast<std::size_t>(r) * cols_];
    const double inv = 1.0 / prow[q];
    nonzeros.clear();
    for (int j = 0; j < cols_; ++j) {
      if (prow[j] == 0.0) continue;
      prow[j] *= inv;
      if (std::fabs(prow[j]) < kDropTol) {
        prow[j] = 0.0;
      } else {
        nonzeros.push_back(j);
      }
    }
    prow[q] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &tab_[static_cast<std::size_t>(i) * cols_];
      const double f = row[q];
      if (f == 0.0) continue;
      for (const int j : nonzeros) {
        row[j] -= f * prow[j];
        if (std::fabs(row[j]) < kDropTol) row[j] = 0.0;
      }
      row[q] = 0.0;
    }
    const double fd = d_[q];
    if (fd != 0.0) {
      for (const int j : nonzeros) d_[j] -= fd * prow[j];
      d_[q] = 0.0;
    }
    row_of_[basis_[r]] = -1;
    basis_[r] = q;
    row_of_[q] = r;
  }

  void drive_out_artificials() {
    std::vector<int> scratch;
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < first_artificial()) continue;
      int best = -1;
      double best_abs = 1e-7;
      for (int j = 0; j < first_artificial(); ++j) {
        if (row_of_[j] >= 0) continue;
        const double a = std::fabs(at(r, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (best < 0) continue;  // redundant row; the artificial stays at zero
      const int art = basis_[r];
      pivot(r, best, scratch);
      beta_[r] = x_[best];
      x_[art] = 0.0;
      at_upper_[art] = false;
      sync_basic_values();
    }
    for (int j = first_artificial(); j < cols_; ++j) {
      up_[j] = 0.0;
      if (row_of_[j] < 0) x_[j] = 0.0;
    }
  }

  double primal_residual() const {
    std::vector<double> point(x_.begin(), x_.begin() + n_);
    return model_.max_violation(point);
  }

  // Recomputes B^-1 A from the original rows for the current basis.
  void rebuild() {
    tab_ = original_;
    std::vector<double> rhs = original_rhs_;
    std::vector<int> basic_cols = basis_;
    std::vector<bool> assigned(m_, false);
    std::vector<int> new_basis(m_, -1);
    for (const int col : basic_cols) {
      int pr = -1;
      double best = kPivotTol;
      for (int i = 0; i < m_; ++i) {
        if (assigned[i]) continue;
        if (std::fabs(at(i, col)) > best) {
          best = std::fabs(at(i, col));
          pr = i;
        }
      }
      if (pr < 0) {
        throw Error(ErrorCode::kNumericalFailure, "singular basis on rebuild");
      }
      assigned[pr] = true;
      new_basis[pr] = col;
      const double inv = 1.0 / at(pr, col);
      for (int j = 0; j < cols_; ++j) at(pr, j) *= inv;
      rhs[pr] *= inv;
      for (int i = 0; i < m_; ++i) {
        if (i == pr) continue;
        const double f = at(i, col);
        if (f == 0.0) continue;
        for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(pr, j);
        rhs[i] -= f * rhs[pr];
      }
    }
    basis_ = new_basis;
    std::fill(row_of_.begin(), row_of_.end(), -1);
    for (int i = 0; i < m_; ++i) row_of_[basis_[i]] = i;
    for (int i = 0; i < m_; ++i) {
      double v = rhs[i];
      for (int j = 0; j < cols_; ++j) {
        if (row_of_[j] < 0 && x_[j] != 0.0) v -= at(i, j) * x_[j];
      }
      beta_[i] = v;
    }
    sync_basic_values();
    set_costs(cost_);
  }

  const MipModel& model_;
  const LpOptions& options_;
  int m_ = 0;
  int n_ = 0;
  int cols_ = 0;
  int num_artificial_ = 0;
  long iterations_ = 0;
  std::vector<double> tab_;
  std::vector<double> original_;
  std::vector<double> original_rhs_;
  std::vector<double> beta_;
  std::vector<int> basis_;
  std::vector<int> row_of_;
  std::vector<double> lo_;
  std::vector<double> up_;
  std::vector<double> x_;
  std::vector<bool> at_upper_;
  std::vector<double> sign_;
  std::vector<double> cost_;
  std::vector<double> d_;
};

}  // namespace

std::string_view lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

LpOutcome simplex_solve(const MipModel& model, const LpOptions& options) {
  return DenseSimplex(model, options).solve();
}

}  // namespace exclear
