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

#include "irs/selection.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "irs/error.hpp"
#include "irs/lp.hpp"

namespace irs {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

double capped_delta(const SelectionParams& p) { return std::min(p.delta, p.tau); }

// Size range [lo, hi] clipped to [1, |C|].
std::pair<std::size_t, std::size_t> size_range(const RateTables& tables,
                                               const SelectionParams& p) {
  const std::size_t C = tables.num_configs();
  if (C == 0) throw std::invalid_argument("selection: empty rate tables");
  const std::size_t lo = std::clamp<std::size_t>(p.c_min, 1, C);
  const std::size_t hi = std::min(p.c_max, C);
  if (lo > hi) throw std::invalid_argument("selection: empty C^T range");
  return {lo, hi};
}

bool feasible_sum(double sum_r_hat, std::size_t count, const SelectionParams& p) {
  const double avg = p.tau / (p.tau + 1.0) * sum_r_hat / static_cast<double>(count);
  return avg >= p.r_min * (1.0 - kFeasibilitySlack);
}

ConfigSet make_set(std::vector<std::size_t> members, const SelectionParams& p) {
  std::sort(members.begin(), members.end());
  return ConfigSet{std::move(members), p.tau, p.delta};
}

SelectionResult finish(ConfigSet chosen, const RateTables& tables, const SelectionParams& p,
                       std::string strategy, std::uint64_t iterations) {
  SelectionResult res;
  res.c_target = chosen.size();
  res.objective = objective_value(chosen, tables, p);
  res.feasible = is_feasible(chosen, tables, p);
  res.chosen = std::move(chosen);
  res.strategy = std::move(strategy);
  res.iterations = iterations;
  return res;
}

void check_target(const RateTables& tables, std::size_t c_target) {
  if (c_target < 1 || c_target > tables.num_configs())
    throw std::invalid_argument("selection: c_target must lie in [1, |C|]");
}

}  // namespace

double objective_value(const ConfigSet& cs, const RateTables& tables,
                       const SelectionParams& params) {
  if (cs.members.empty()) throw std::invalid_argument("objective_value: empty set");
  double sum_r = 0.0;
  double sum_s = 0.0;
  for (std::size_t c : cs.members) {
    sum_r += tables.r_hat[c];
    sum_s += tables.s_hat[c];
  }
  const double n = static_cast<double>(cs.size());
  const double tau = params.tau;
  const double delta = capped_delta(params);
  return delta / (tau + 1.0) * (sum_r / n) + (tau - delta) / (tau + 1.0) * (sum_s / n);
}

double objective_weight(std::size_t c, const RateTables& tables, const SelectionParams& params) {
  const double tau = params.tau;
  const double delta = capped_delta(params);
  return (delta * tables.r_hat[c] + (tau - delta) * tables.s_hat[c]) / (tau + 1.0);
}

bool is_feasible(const ConfigSet& cs, const RateTables& tables, const SelectionParams& params) {
  if (cs.members.empty()) throw std::invalid_argument("is_feasible: empty set");
  double sum_r = 0.0;
  for (std::size_t c : cs.members) sum_r += tables.r_hat[c];
  return feasible_sum(sum_r, cs.size(), params);
}

SelectionResult parallel_slide(const RateTables& tables, const SelectionParams& params) {
  const auto [lo, hi] = size_range(tables, params);
  const std::size_t C = tables.num_configs();
  const double eps = params.epsilon_ratio;

  std::vector<double> key(C);
  for (std::size_t c = 0; c < C; ++c) {
    const double r = tables.r_hat[c];
    const double s = tables.s_hat[c];
    key[c] = params.ratio_mode == RatioMode::kLiteral ? r / std::max(s, eps)
                                                      : s / std::max(r, eps);
  }
  // Removal order: smallest key first, then lower r_hat, then lower id.
  // The key does not depend on C^T, so every inner loop removes a prefix.
  std::vector<std::size_t> order(C);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    if (tables.r_hat[a] != tables.r_hat[b]) return tables.r_hat[a] < tables.r_hat[b];
    return a < b;
  });

  // Suffix sums over the survivors of each prefix removal.
  std::vector<double> tail_r(C + 1, 0.0);
  std::vector<double> tail_w(C + 1, 0.0);
  for (std::size_t i = C; i-- > 0;) {
    tail_r[i] = tail_r[i + 1] + tables.r_hat[order[i]];
    tail_w[i] = tail_w[i + 1] + objective_weight(order[i], tables, params);
  }

  std::uint64_t removals = 0;
  std::size_t best_target = 0;
  double best_value = -INFINITY;
  for (std::size_t target = hi; target >= lo; --target) {
    std::size_t used = C;
    while (used > target) {
      --used;
      ++removals;
    }
    const std::size_t first = C - target;
    if (feasible_sum(tail_r[first], target, params)) {
      const double value = tail_w[first] / static_cast<double>(target);
      if (value >= best_value) {
        best_value = value;
        best_target = target;
      }
    }
    if (target == 1) break;
  }
  if (best_target == 0)
    throw NoFeasibleSolution("parallel_slide: no set size meets the rate requirement");

  std::vector<std::size_t> members(order.end() - static_cast<std::ptrdiff_t>(best_target),
                                   order.end());
  return finish(make_set(std::move(members), params), tables, params, "parallel_slide",
                removals);
}

SelectionResult top_rate(const RateTables& tables, const SelectionParams& params,
                         std::size_t c_target) {
  check_target(tables, c_target);
  std::vector<std::size_t> order(tables.num_configs());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tables.r_hat[a] > tables.r_hat[b];
  });
  order.resize(c_target);
  return finish(make_set(std::move(order), params), tables, params, "top_rate", 0);
}

std::vector<double> relaxed_indicators(const RateTables& tables, const SelectionParams& params,
                                       std::size_t c_target, double* lp_value,
                                       std::size_t* pivots) {
  check_target(tables, c_target);
  const std::size_t C = tables.num_configs();
  const double scale = std::max(1.0, *std::max_element(tables.r_hat.begin(), tables.r_hat.end()));
  const double n = static_cast<double>(c_target);

  LinearProgram lp;
  lp.objective.resize(C);
  lp.upper.assign(C, 1.0);
  lp.rows.assign(2, std::vector<double>(C));
  for (std::size_t c = 0; c < C; ++c) {
    lp.objective[c] = objective_weight(c, tables, params) / (scale * n);
    lp.rows[0][c] = 1.0;
    lp.rows[1][c] = tables.r_hat[c] / scale;
  }
  lp.senses = {RowSense::kEqual, RowSense::kGreaterEqual};
  lp.rhs = {n, n * params.r_min * (params.tau + 1.0) / params.tau / scale};

  const LpSolution sol = solve_lp(lp);
  if (lp_value) *lp_value = sol.value * scale;
  if (pivots) *pivots = sol.iterations;
  std::vector<double> y = sol.y;
  for (double& v : y) v = std::clamp(v, 0.0, 1.0);
  return y;
}

SelectionResult relax_round(const RateTables& tables, const SelectionParams& params,
                            std::size_t c_target, Rng& rng) {
  double lp_value = 0.0;
  std::size_t pivots = 0;
  std::vector<double> weight = relaxed_indicators(tables, params, c_target, &lp_value, &pivots);

  constexpr double kZero = 1e-12;
  std::vector<std::size_t> chosen;
  chosen.reserve(c_target);
  while (chosen.size() < c_target) {
    double total = 0.0;
    for (double w : weight)
      if (w > kZero) total += w;
    if (!(total > 0.0)) break;
    const double u = uniform01(rng) * total;
    double acc = 0.0;
    std::size_t pick = weight.size();
    for (std::size_t c = 0; c < weight.size(); ++c) {
      if (weight[c] <= kZero) continue;
      pick = c;
      acc += weight[c];
      if (u < acc) break;
    }
    chosen.push_back(pick);
    weight[pick] = 0.0;
  }
  if (chosen.size() < c_target)
    throw InfeasibleLP("relax_round: relaxation support smaller than the target size");

  SelectionResult res =
      finish(make_set(std::move(chosen), params), tables, params, "relax", pivots);
  res.lp_value = lp_value;
  return res;
}

SelectionResult brute_force_oracle(const RateTables& tables, const SelectionParams& params) {
  const auto [lo, hi] = size_range(tables, params);
  const std::size_t C = tables.num_configs();
  if (C > params.oracle_cap || C >= 63)
    throw SizeGuard("brute_force_oracle: " + std::to_string(C) + " configurations exceed the cap");

  std::vector<double> w(C);
  for (std::size_t c = 0; c < C; ++c) w[c] = objective_weight(c, tables, params);

  std::uint64_t best_mask = 0;
  double best_value = -INFINITY;
  const std::uint64_t limit = std::uint64_t{1} << C;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (count < lo || count > hi) continue;
    double sum_r = 0.0;
    double sum_w = 0.0;
    for (std::size_t c = 0; c < C; ++c) {
      if (mask >> c & 1U) {
        sum_r += tables.r_hat[c];
        sum_w += w[c];
      }
    }
    if (!feasible_sum(sum_r, count, params)) continue;
    const double value = sum_w / static_cast<double>(count);
    if (value > best_value) {
      best_value = value;
      best_mask = mask;
    }
  }
  if (best_mask == 0) throw NoFeasibleSolution("brute_force_oracle: no feasible subset");

  std::vector<std::size_t> members;
  for (std::size_t c = 0; c < C; ++c)
    if (best_mask >> c & 1U) members.push_back(c);
  return finish(make_set(std::move(members), params), tables, params, "oracle", limit - 1);
}

}  // namespace irs
