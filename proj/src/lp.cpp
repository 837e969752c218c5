// Copyright 2026 The Authors.
//
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

#include "irs/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "irs/error.hpp"

namespace irs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Status { kBasic, kAtLower, kAtUpper };

// Working problem in equality form: A x = b, lo <= x <= hi, columns are
// structural variables, then surplus variables, then artificials.
class BoundedSimplex {
 public:
  BoundedSimplex(const LinearProgram& lp, double tol) : tol_(tol) {
    const std::size_t n = lp.objective.size();
    m_ = lp.rows.size();
    if (lp.senses.size() != m_ || lp.rhs.size() != m_ || lp.upper.size() != n)
      throw std::invalid_argument("solve_lp: inconsistent problem dimensions");
    structural_ = n;

    std::size_t surplus = 0;
    for (auto s : lp.senses)
      if (s == RowSense::kGreaterEqual) ++surplus;
    total_ = n + surplus + m_;
    cols_.assign(total_, std::vector<double>(m_, 0.0));
    lo_.assign(total_, 0.0);
    hi_.assign(total_, kInf);
    cost_.assign(total_, 0.0);
    b_ = lp.rhs;

    for (std::size_t j = 0; j < n; ++j) {
      hi_[j] = lp.upper[j];
      cost_[j] = lp.objective[j];
      for (std::size_t i = 0; i < m_; ++i) {
        if (lp.rows[i].size() != n) throw std::invalid_argument("solve_lp: ragged row");
        cols_[j][i] = lp.rows[i][j];
      }
    }
    std::size_t next = n;
    for (std::size_t i = 0; i < m_; ++i)
      if (lp.senses[i] == RowSense::kGreaterEqual) cols_[next++][i] = -1.0;

    // Structural and surplus variables start at their lower bound (0); the
    // artificials absorb the residual b.
    x_.assign(total_, 0.0);
    status_.assign(total_, Status::kAtLower);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t a = n + surplus + i;
      const double sign = b_[i] >= 0.0 ? 1.0 : -1.0;
      cols_[a][i] = sign;
      x_[a] = std::abs(b_[i]);
      status_[a] = Status::kBasic;
      basis_[i] = a;
    }
    first_artificial_ = n + surplus;
    binv_.assign(m_, std::vector<double>(m_, 0.0));
    for (std::size_t i = 0; i < m_; ++i) binv_[i][i] = 1.0 / cols_[basis_[i]][i];
  }

  LpSolution solve() {
    // Phase 1: maximize -sum(artificials).
    std::vector<double> phase1(total_, 0.0);
    for (std::size_t j = first_artificial_; j < total_; ++j) phase1[j] = -1.0;
    run(phase1);
    double infeasibility = 0.0;
    for (std::size_t j = first_artificial_; j < total_; ++j) infeasibility += x_[j];
    if (infeasibility > tol_ * (1.0 + rhs_scale()))
      throw InfeasibleLP("solve_lp: constraints cannot be satisfied");

    // Phase 2: artificials pinned at zero.
    for (std::size_t j = first_artificial_; j < total_; ++j) hi_[j] = 0.0;
    run(cost_);

    LpSolution sol;
    sol.y.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(structural_));
    for (std::size_t j = 0; j < structural_; ++j) sol.value += cost_[j] * sol.y[j];
    sol.iterations = iterations_;
    return sol;
  }

 private:
  double rhs_scale() const {
    double s = 0.0;
    for (double v : b_) s += std::abs(v);
    return s;
  }

  void run(const std::vector<double>& cost) {
    std::size_t stall = 0;
    const std::size_t max_iter = 50 * (total_ + m_) + 1000;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      const bool bland = stall > 20;
      // Duals: pi = c_B^T B^{-1}.
      std::vector<double> pi(m_, 0.0);
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t r = 0; r < m_; ++r) pi[i] += cost[basis_[r]] * binv_[r][i];

      std::size_t enter = total_;
      double best = 0.0;
      for (std::size_t j = 0; j < total_; ++j) {
        if (status_[j] == Status::kBasic || lo_[j] == hi_[j]) continue;
        double d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) d -= pi[i] * cols_[j][i];
        const bool improves = (status_[j] == Status::kAtLower && d > tol_) ||
                              (status_[j] == Status::kAtUpper && d < -tol_);
        if (!improves) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          enter = j;
        }
      }
      if (enter == total_) return;
      ++iterations_;

      // alpha = B^{-1} a_enter; moving x_enter by +dir*theta changes x_B by -dir*theta*alpha.
      std::vector<double> alpha(m_, 0.0);
      for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t i = 0; i < m_; ++i) alpha[r] += binv_[r][i] * cols_[enter][i];
      const double dir = status_[enter] == Status::kAtLower ? 1.0 : -1.0;

      // Ratio test. A tie with the entering variable's own bound flip keeps the flip.
      double theta = hi_[enter] - lo_[enter];
      std::size_t leave_row = m_;
      bool leave_to_upper = false;
      double leave_pivot = 0.0;
      for (std::size_t r = 0; r < m_; ++r) {
        const double a = dir * alpha[r];
        const std::size_t v = basis_[r];
        double limit = kInf;
        bool to_upper = false;
        if (a > tol_) {
          limit = (x_[v] - lo_[v]) / a;
        } else if (a < -tol_ && hi_[v] < kInf) {
          limit = (hi_[v] - x_[v]) / -a;
          to_upper = true;
        }
        if (limit == kInf) continue;
        const bool better = limit < theta - tol_;
        const bool tie = leave_row != m_ && limit <= theta + tol_ &&
                         (bland ? v < basis_[leave_row] : std::abs(a) > leave_pivot);
        if (better || tie) {
          theta = std::max(0.0, limit);
          leave_row = r;
          leave_to_upper = to_upper;
          leave_pivot = std::abs(a);
        }
      }
      if (theta == kInf) throw std::runtime_error("solve_lp: unbounded problem");
      stall = theta <= tol_ ? stall + 1 : 0;

      x_[enter] += dir * theta;
      for (std::size_t r = 0; r < m_; ++r) x_[basis_[r]] -= dir * theta * alpha[r];

      if (leave_row == m_) {
        // Bound flip, basis unchanged.
        status_[enter] = status_[enter] == Status::kAtLower ? Status::kAtUpper : Status::kAtLower;
        x_[enter] = status_[enter] == Status::kAtLower ? lo_[enter] : hi_[enter];
        continue;
      }
      const std::size_t leaving = basis_[leave_row];
      status_[leaving] = leave_to_upper ? Status::kAtUpper : Status::kAtLower;
      x_[leaving] = leave_to_upper ? hi_[leaving] : lo_[leaving];
      status_[enter] = Status::kBasic;
      basis_[leave_row] = enter;

      // Update B^{-1} with the pivot on alpha[leave_row].
      const double piv = alpha[leave_row];
      for (std::size_t i = 0; i < m_; ++i) binv_[leave_row][i] /= piv;
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == leave_row || alpha[r] == 0.0) continue;
        const double f = alpha[r];
        for (std::size_t i = 0; i < m_; ++i) binv_[r][i] -= f * binv_[leave_row][i];
      }
    }
    throw std::runtime_error("solve_lp: iteration limit reached");
  }

  double tol_;
  std::size_t m_ = 0;
  std::size_t structural_ = 0;
  std::size_t total_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<double>> cols_;
  std::vector<double> lo_, hi_, cost_, b_, x_;
  std::vector<Status> status_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<double>> binv_;
  std::size_t iterations_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double tol) {
  return BoundedSimplex(lp, tol).solve();
}

}  // namespace irs
