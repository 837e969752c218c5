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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "irs/error.hpp"
#include "irs/lp.hpp"
#include "irs/presets.hpp"
#include "irs/selection.hpp"
#include "test_util.hpp"

using namespace irs;
using test::flat_tables;

namespace {

std::vector<double> solve_small(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-12) return {};
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Optimum over every vertex of {A y (=, >=) b, 0 <= y <= u}: each variable at
// a bound or basic, basics fixed by the active rows. -inf when infeasible.
double vertex_optimum(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();
  double best = -INFINITY;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> state(n);
    std::size_t x = code;
    std::vector<std::size_t> basic;
    for (std::size_t i = 0; i < n; ++i) {
      state[i] = static_cast<int>(x % 3);
      x /= 3;
      if (state[i] == 2) basic.push_back(i);
    }
    if (basic.size() > m) continue;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<std::size_t> active;
      bool ok = true;
      for (std::size_t r = 0; r < m; ++r) {
        const bool on = mask >> r & 1U;
        if (lp.senses[r] == RowSense::kEqual && !on) ok = false;
        if (on) active.push_back(r);
      }
      if (!ok || active.size() != basic.size()) continue;
      std::vector<double> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = state[i] == 1 ? lp.upper[i] : 0.0;
      if (!basic.empty()) {
        std::vector<std::vector<double>> a(basic.size(), std::vector<double>(basic.size()));
        std::vector<double> b(basic.size());
        for (std::size_t i = 0; i < active.size(); ++i) {
          const auto& row = lp.rows[active[i]];
          b[i] = lp.rhs[active[i]];
          for (std::size_t j = 0; j < n; ++j)
            if (state[j] != 2) b[i] -= row[j] * y[j];
          for (std::size_t j = 0; j < basic.size(); ++j) a[i][j] = row[basic[j]];
        }
        const auto sol = solve_small(a, b);
        if (sol.empty()) continue;
        for (std::size_t j = 0; j < basic.size(); ++j) y[basic[j]] = sol[j];
      }
      bool feasible = true;
      for (std::size_t i = 0; i < n; ++i)
        feasible = feasible && y[i] >= -1e-9 && y[i] <= lp.upper[i] + 1e-9;
      for (std::size_t r = 0; r < m; ++r) {
        const double lhs = std::inner_product(lp.rows[r].begin(), lp.rows[r].end(), y.begin(), 0.0);
        if (lp.senses[r] == RowSense::kEqual) feasible = feasible && std::abs(lhs - lp.rhs[r]) < 1e-7;
        else feasible = feasible && lhs >= lp.rhs[r] - 1e-7;
      }
      if (!feasible) continue;
      best = std::max(best, std::inner_product(lp.objective.begin(), lp.objective.end(), y.begin(), 0.0));
    }
  }
  return best;
}

RateTables random_tables(std::mt19937_64& rng, std::size_t C) {
  std::uniform_real_distribution<double> r(1.0, 3.0);
  std::uniform_real_distribution<double> f(0.0, 1.0);
  std::vector<double> rv(C), sv(C);
  for (std::size_t c = 0; c < C; ++c) {
    rv[c] = r(rng);
    sv[c] = rv[c] * f(rng);
  }
  return flat_tables(rv, sv);
}

// Literal reading of the removal loop: restart from all configurations for
// every C^T and scan for the argmin each time.
SelectionResult naive_slide(const RateTables& t, const SelectionParams& p) {
  const std::size_t C = t.num_configs();
  auto key = [&](std::size_t c) {
    const double r = t.r_hat[c];
    const double s = t.s_hat[c];
    return p.ratio_mode == RatioMode::kLiteral ? r / std::max(s, p.epsilon_ratio)
                                               : s / std::max(r, p.epsilon_ratio);
  };
  SelectionResult best;
  best.objective = -INFINITY;
  for (std::size_t target = std::min(C, p.c_max); target >= std::max<std::size_t>(p.c_min, 1);
       --target) {
    std::vector<std::size_t> used(C);
    std::iota(used.begin(), used.end(), 0);
    while (used.size() > target) {
      auto worst = used.begin();
      for (auto it = used.begin(); it != used.end(); ++it) {
        const double a = key(*it), b = key(*worst);
        if (a < b || (a == b && (t.r_hat[*it] < t.r_hat[*worst] ||
                                 (t.r_hat[*it] == t.r_hat[*worst] && *it < *worst))))
          worst = it;
      }
      used.erase(worst);
    }
    const ConfigSet cs{used, p.tau, p.delta};
    if (is_feasible(cs, t, p)) {
      const double v = objective_value(cs, t, p);
      if (v >= best.objective) {
        best.objective = v;
        best.chosen = cs;
      }
    }
    if (target == 1) break;
  }
  return best;
}

}  // namespace

TEST_CASE("selection: objective collapses and hand values") {
  const RateTables t = flat_tables({4.0, 2.0}, {1.0, 0.5});
  SelectionParams p;
  p.tau = 10;
  p.delta = 0;
  const ConfigSet both{{0, 1}, 10, 0};
  CHECK(objective_value(both, t, p) == doctest::Approx(10.0 / 11.0 * 0.75));
  p.delta = 10;
  CHECK(objective_value(both, t, p) == doctest::Approx(10.0 / 11.0 * 3.0));
  p.delta = 25;  // capped at tau
  CHECK(objective_value(both, t, p) == doctest::Approx(10.0 / 11.0 * 3.0));
  p.delta = 4;
  const ConfigSet single{{0}, 10, 4};
  CHECK(objective_value(single, t, p) == doctest::Approx(4.0 / 11.0 * 4.0 + 6.0 / 11.0 * 1.0));
  // Replicas count with multiplicity.
  const ConfigSet rep{{0, 0, 1}, 10, 4};
  CHECK(objective_value(rep, t, p) ==
        doctest::Approx(4.0 / 11.0 * (10.0 / 3) + 6.0 / 11.0 * (2.5 / 3)));
  CHECK_THROWS_AS(objective_value(ConfigSet{}, t, p), std::invalid_argument);
}

TEST_CASE("selection: feasibility") {
  SelectionParams p;
  p.tau = 9;
  const RateTables t = flat_tables({10.0, 0.0}, {1.0, 0.0});
  p.r_min = 0;
  CHECK(is_feasible(ConfigSet{{1}, 9, 0}, t, p));
  p.r_min = 9.0;  // boundary: 10 * 9/10 == 9
  CHECK(is_feasible(ConfigSet{{0}, 9, 0}, t, p));
  CHECK_FALSE(is_feasible(ConfigSet{{0, 1}, 9, 0}, t, p));
  p.r_min = 9.0 * (1 + 1e-9);
  CHECK_FALSE(is_feasible(ConfigSet{{0}, 9, 0}, t, p));
}

TEST_CASE("selection: fixed-size objective is affine in the indicators") {
  std::mt19937_64 rng(31);
  SelectionParams p;
  p.delta = 3;
  for (int trial = 0; trial < 50; ++trial) {
    const RateTables t = random_tables(rng, 8);
    // Swapping member a for b changes the objective by (w_b - w_a) / n
    // whatever the other members are.
    const std::size_t a = rng() % 8, b = rng() % 8;
    for (int rep = 0; rep < 5; ++rep) {
      ConfigSet cs{{a}, p.tau, p.delta};
      for (int i = 0; i < 3; ++i) cs.members.push_back(rng() % 8);
      ConfigSet swapped = cs;
      swapped.members[0] = b;
      const double diff = objective_value(swapped, t, p) - objective_value(cs, t, p);
      CHECK(diff == doctest::Approx((objective_weight(b, t, p) - objective_weight(a, t, p)) / 4));
    }
  }
}

TEST_CASE("selection: parallel_slide agrees with the literal loop") {
  std::mt19937_64 rng(2);
  for (RatioMode mode : {RatioMode::kLiteral, RatioMode::kInverse}) {
    for (int trial = 0; trial < 60; ++trial) {
      const RateTables t = random_tables(rng, 2 + rng() % 15);
      SelectionParams p;
      p.delta = static_cast<double>(rng() % 11);
      p.ratio_mode = mode;
      p.r_min = (trial % 3) * 0.6;
      SelectionResult fast;
      try {
        fast = parallel_slide(t, p);
      } catch (const NoFeasibleSolution&) {
        CHECK(naive_slide(t, p).chosen.members.empty());
        continue;
      }
      const SelectionResult slow = naive_slide(t, p);
      auto slow_members = slow.chosen.members;
      std::sort(slow_members.begin(), slow_members.end());
      CHECK(fast.chosen.members == slow_members);
      CHECK(fast.objective == doctest::Approx(slow.objective));
      CHECK(fast.feasible == is_feasible(fast.chosen, t, p));
      CHECK(fast.feasible);
      const std::size_t C = t.num_configs();
      CHECK(fast.iterations == C * (C - 1) / 2);
      CHECK(fast.iterations <= C * C);
    }
  }
}

TEST_CASE("selection: parallel_slide removal orientation and ties") {
  // r / s: 2, 4, 1.25. Literal drops config 2 first, inverse drops config 1.
  const RateTables t = flat_tables({2.0, 4.0, 2.5}, {1.0, 1.0, 2.0});
  SelectionParams p;
  p.c_min = p.c_max = 2;
  CHECK(parallel_slide(t, p).chosen.members == std::vector<std::size_t>{0, 1});
  p.ratio_mode = RatioMode::kInverse;
  CHECK(parallel_slide(t, p).chosen.members == std::vector<std::size_t>{0, 2});

  // Zero secrecy: huge literal key, never removed first.
  const RateTables z = flat_tables({1.0, 1.0}, {0.0, 0.5});
  SelectionParams q;
  q.c_min = q.c_max = 1;
  CHECK(parallel_slide(z, q).chosen.members == std::vector<std::size_t>{0});

  // Equal keys: the lower-rate one goes, then the lower id.
  const RateTables e = flat_tables({2.0, 1.0, 1.0}, {1.0, 0.5, 0.5});
  CHECK(parallel_slide(e, q).chosen.members == std::vector<std::size_t>{0});
  q.c_min = q.c_max = 2;
  CHECK(parallel_slide(e, q).chosen.members == std::vector<std::size_t>{0, 2});
}

TEST_CASE("selection: identical configurations") {
  const RateTables t = flat_tables(std::vector<double>(5, 2.0), std::vector<double>(5, 1.0));
  SelectionParams p;
  const auto res = parallel_slide(t, p);
  CHECK(res.chosen.size() == 1);  // ties favour the smaller set
  CHECK(res.feasible);
  p.r_min = 2.0 * 10.0 / 11.0;
  CHECK(parallel_slide(t, p).feasible);
  p.r_min = 2.0;
  CHECK_THROWS_AS(parallel_slide(t, p), NoFeasibleSolution);
}

TEST_CASE("selection: competitive ratio on small scenarios") {
  double worst = INFINITY;
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto cfg = room_preset(3, "toy3");
    cfg.mc_samples = 10;
    const Scenario sc = build_scenario(cfg, seed);
    const auto configs = enumerate_configs(3, 3);
    const RateTables t = build_tables(sc, configs, 10, seed);
    SelectionParams p;
    p.delta = 3;
    const auto ps = parallel_slide(t, p);
    const auto opt = brute_force_oracle(t, p);
    CHECK(ps.objective >= 0.405 * opt.objective);
    CHECK(ps.objective <= opt.objective * (1 + 1e-12));
    worst = std::min(worst, ps.objective / opt.objective);
  }
  MESSAGE("worst observed ratio " << worst);
}

TEST_CASE("selection: top_rate") {
  const RateTables t = flat_tables({3.0, 5.0, 1.0, 5.0, 4.0}, {1, 1, 1, 1, 1});
  SelectionParams p;
  CHECK(top_rate(t, p, 1).chosen.members == std::vector<std::size_t>{1});
  CHECK(top_rate(t, p, 3).chosen.members == std::vector<std::size_t>{1, 3, 4});
  CHECK(top_rate(t, p, 5).chosen.size() == 5);
  CHECK_THROWS_AS(top_rate(t, p, 0), std::invalid_argument);
  CHECK_THROWS_AS(top_rate(t, p, 6), std::invalid_argument);

  std::mt19937_64 rng(9);
  const RateTables big = random_tables(rng, 40);
  std::vector<std::size_t> order(40);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return big.r_hat[a] > big.r_hat[b]; });
  for (std::size_t c : {1, 7, 20}) {
    std::vector<std::size_t> prefix(order.begin(), order.begin() + c);
    std::sort(prefix.begin(), prefix.end());
    CHECK(top_rate(big, p, c).chosen.members == prefix);
  }
}

TEST_CASE("lp: matches vertex enumeration on random programs") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  int infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    LinearProgram lp;
    lp.objective.resize(n);
    lp.upper.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      lp.objective[i] = u(rng);
      lp.upper[i] = 0.5 + std::abs(u(rng));
    }
    const std::size_t m = 1 + rng() % 2;
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<double> row(n);
      for (auto& v : row) v = u(rng);
      lp.rows.push_back(row);
      lp.senses.push_back(rng() % 2 ? RowSense::kEqual : RowSense::kGreaterEqual);
      lp.rhs.push_back(u(rng));
    }
    const double oracle = vertex_optimum(lp);
    if (std::isinf(oracle)) {
      CHECK_THROWS_AS(solve_lp(lp), InfeasibleLP);
      ++infeasible;
      continue;
    }
    const LpSolution sol = solve_lp(lp);
    CHECK(sol.value == doctest::Approx(oracle).epsilon(1e-7));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(sol.y[i] >= -1e-9);
      CHECK(sol.y[i] <= lp.upper[i] + 1e-9);
    }
  }
  CHECK(infeasible > 0);
  CHECK(infeasible < 200);
}

TEST_CASE("selection: relaxation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const RateTables t = random_tables(rng, 5);
    SelectionParams p;
    p.delta = 4;
    p.r_min = 1.5;
    const std::size_t target = 1 + trial % 5;

    // Oracle: the same relaxation solved by vertex enumeration.
    LinearProgram lp;
    lp.upper.assign(5, 1.0);
    lp.rows = {std::vector<double>(5, 1.0), t.r_hat};
    lp.senses = {RowSense::kEqual, RowSense::kGreaterEqual};
    lp.rhs = {double(target), target * p.r_min * (p.tau + 1) / p.tau};
    for (std::size_t c = 0; c < 5; ++c) lp.objective.push_back(objective_weight(c, t, p) / target);
    const double oracle = vertex_optimum(lp);
    if (std::isinf(oracle)) {
      CHECK_THROWS_AS(relaxed_indicators(t, p, target), InfeasibleLP);
      continue;
    }
    double value = 0.0;
    const auto y = relaxed_indicators(t, p, target, &value);
    CHECK(value == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(std::accumulate(y.begin(), y.end(), 0.0) == doctest::Approx(double(target)));

    // Relaxation bound over every integral set of that size.
    for (std::uint32_t mask = 1; mask < 32; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != target) continue;
      ConfigSet cs{{}, p.tau, p.delta};
      for (std::size_t c = 0; c < 5; ++c)
        if (mask >> c & 1U) cs.members.push_back(c);
      if (is_feasible(cs, t, p)) CHECK(objective_value(cs, t, p) <= value * (1 + 1e-9));
    }

    Rng r1 = make_stream(trial, Stream::kRounding);
    Rng r2 = make_stream(trial, Stream::kRounding);
    const auto a = relax_round(t, p, target, r1);
    const auto b = relax_round(t, p, target, r2);
    CHECK(a.chosen.members == b.chosen.members);
    CHECK(a.chosen.size() == target);
    CHECK(a.lp_value == doctest::Approx(value));

    // Integral optimum: rounding returns exactly the support.
    bool integral = true;
    for (double v : y) integral = integral && (v < 1e-9 || v > 1 - 1e-9);
    if (integral) {
      std::vector<std::size_t> support;
      for (std::size_t c = 0; c < 5; ++c)
        if (y[c] > 0.5) support.push_back(c);
      CHECK(a.chosen.members == support);
    }
  }
  const RateTables t = flat_tables({1.0, 1.0}, {0.5, 0.5});
  SelectionParams p;
  p.r_min = 5.0;
  Rng rng2 = make_stream(1, Stream::kRounding);
  CHECK_THROWS_AS(relax_round(t, p, 1, rng2), InfeasibleLP);
}

TEST_CASE("selection: brute-force oracle") {
  SelectionParams p;
  p.delta = 5;
  const RateTables one = flat_tables({2.0}, {1.0});
  CHECK(brute_force_oracle(one, p).chosen.members == std::vector<std::size_t>{0});

  // Config 0 dominates; with r_min between the pair's mean and config 0's
  // rate both candidates are feasible and the better one must come back.
  const RateTables two = flat_tables({4.0, 3.0}, {2.0, 1.0});
  p.r_min = 3.0;
  const ConfigSet dom{{0}, p.tau, p.delta};
  const ConfigSet both{{0, 1}, p.tau, p.delta};
  REQUIRE(is_feasible(both, two, p));
  const double best = std::max(objective_value(dom, two, p), objective_value(both, two, p));
  CHECK(brute_force_oracle(two, p).objective == doctest::Approx(best));
  CHECK(brute_force_oracle(two, p).chosen.members == dom.members);

  std::mt19937_64 rng(3);
  const RateTables big = random_tables(rng, 21);
  CHECK_THROWS_AS(brute_force_oracle(big, p), SizeGuard);
  p.r_min = 100.0;
  CHECK_THROWS_AS(brute_force_oracle(two, p), NoFeasibleSolution);
}

TEST_CASE("selection: genetic search") {
  SelectionParams p;
  p.delta = 3;
  // Flat landscape: any nonempty individual is optimal.
  const RateTables flat = flat_tables(std::vector<double>(6, 2.0), std::vector<double>(6, 1.0));
  Rng r0 = make_stream(1, Stream::kGenetic);
  const auto f = genetic_search(flat, p, r0);
  CHECK(f.chosen.size() >= 1);
  CHECK(f.objective == doctest::Approx(objective_value(ConfigSet{{0}, p.tau, p.delta}, flat, p)));
  CHECK(f.iterations == 50);

  // Six-configuration instances against the oracle.
  std::mt19937_64 rng(77);
  int hits = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const RateTables t = random_tables(rng, 6);
    SelectionParams q = p;
    q.r_min = 1.4;
    SelectionResult opt;
    try {
      opt = brute_force_oracle(t, q);
    } catch (const NoFeasibleSolution&) {
      Rng r = make_stream(seed, Stream::kGenetic);
      CHECK_THROWS_AS(genetic_search(t, q, r), NoFeasibleSolution);
      ++hits;
      continue;
    }
    Rng r = make_stream(seed, Stream::kGenetic);
    const auto ga = genetic_search(t, q, r);
    CHECK(ga.feasible);
    CHECK(ga.objective <= opt.objective * (1 + 1e-12));
    if (ga.objective >= opt.objective * (1 - 1e-12)) ++hits;
  }
  CHECK(hits >= 95);

  // Same seed, same answer.
  const RateTables t = random_tables(rng, 30);
  Rng a = make_stream(4, Stream::kGenetic);
  Rng b = make_stream(4, Stream::kGenetic);
  CHECK(genetic_search(t, p, a).chosen.members == genetic_search(t, p, b).chosen.members);

  // Fixed size is respected.
  SelectionParams fixed = p;
  fixed.c_min = fixed.c_max = 7;
  Rng c = make_stream(5, Stream::kGenetic);
  CHECK(genetic_search(t, fixed, c).chosen.size() == 7);
}
