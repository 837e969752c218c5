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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "irs/error.hpp"
#include "irs/selection.hpp"

namespace irs {

namespace {

using Genome = std::vector<std::uint8_t>;

struct Individual {
  Genome genes;
  double fitness = -INFINITY;
};

class Population {
 public:
  Population(const RateTables& tables, const SelectionParams& params)
      : tables_(tables), params_(params), weight_(tables.num_configs()) {
    const std::size_t C = tables.num_configs();
    lo_ = std::clamp<std::size_t>(params.c_min, 1, C);
    hi_ = std::min(params.c_max, C);
    if (lo_ > hi_) throw std::invalid_argument("genetic_search: empty C^T range");
    for (std::size_t c = 0; c < C; ++c) weight_[c] = objective_weight(c, tables, params);
    rank_.resize(C);
    std::iota(rank_.begin(), rank_.end(), 0);
    std::stable_sort(rank_.begin(), rank_.end(),
                     [&](std::size_t a, std::size_t b) { return weight_[a] > weight_[b]; });
  }

  // Greedy cardinality repair: drop the lightest genes above c_max, add the
  // heaviest missing ones below c_min.
  void repair(Genome& g) const {
    std::size_t count = static_cast<std::size_t>(std::count(g.begin(), g.end(), 1));
    for (auto it = rank_.rbegin(); count > hi_ && it != rank_.rend(); ++it) {
      if (g[*it]) {
        g[*it] = 0;
        --count;
      }
    }
    for (auto it = rank_.begin(); count < lo_ && it != rank_.end(); ++it) {
      if (!g[*it]) {
        g[*it] = 1;
        ++count;
      }
    }
  }

  double fitness(const Genome& g) const {
    std::size_t count = 0;
    double sum_r = 0.0;
    double sum_w = 0.0;
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (!g[c]) continue;
      ++count;
      sum_r += tables_.r_hat[c];
      sum_w += weight_[c];
    }
    if (count < lo_ || count > hi_) return -INFINITY;
    const double n = static_cast<double>(count);
    if (params_.tau / (params_.tau + 1.0) * sum_r / n < params_.r_min * (1.0 - 1e-12))
      return -INFINITY;
    return sum_w / n;
  }

 private:
  const RateTables& tables_;
  const SelectionParams& params_;
  std::vector<double> weight_;
  std::vector<std::size_t> rank_;
  std::size_t lo_ = 1;
  std::size_t hi_ = 1;
};

}  // namespace

SelectionResult genetic_search(const RateTables& tables, const SelectionParams& params, Rng& rng) {
  const GeneticParams& gp = params.genetic;
  const std::size_t C = tables.num_configs();
  if (C == 0) throw std::invalid_argument("genetic_search: empty rate tables");
  if (gp.population < 2 || gp.parents_mating < 1 || gp.parents_mating > gp.population ||
      gp.generations < 1)
    throw std::invalid_argument("genetic_search: bad population parameters");

  const Population pop(tables, params);
  const auto size = static_cast<std::size_t>(gp.population);
  const auto parents = static_cast<std::size_t>(gp.parents_mating);

  std::vector<Individual> current(size);
  for (Individual& ind : current) {
    ind.genes.resize(C);
    for (auto& gene : ind.genes) gene = static_cast<std::uint8_t>(uniform_index(rng, 2));
    pop.repair(ind.genes);
    ind.fitness = pop.fitness(ind.genes);
  }

  Individual best;
  auto track = [&](const std::vector<Individual>& gen) {
    for (const Individual& ind : gen)
      if (ind.fitness > best.fitness) best = ind;
  };
  track(current);

  std::vector<std::size_t> order(size);
  std::vector<Individual> next;
  next.reserve(size);
  for (int generation = 0; generation < gp.generations; ++generation) {
    // Steady-state parent selection: the fittest individuals mate and survive.
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return current[a].fitness > current[b].fitness;
    });
    next.clear();
    for (std::size_t i = 0; i < parents; ++i) next.push_back(current[order[i]]);

    for (std::size_t child = 0; next.size() < size; ++child) {
      const Genome& mother = current[order[child % parents]].genes;
      const Genome& father = current[order[(child + 1) % parents]].genes;
      const std::size_t cut = uniform_index(rng, C);
      Individual kid;
      kid.genes.assign(mother.begin(), mother.begin() + static_cast<std::ptrdiff_t>(cut));
      kid.genes.insert(kid.genes.end(), father.begin() + static_cast<std::ptrdiff_t>(cut),
                       father.end());
      for (auto& gene : kid.genes)
        if (uniform01(rng) < gp.mutation_probability)
          gene = static_cast<std::uint8_t>(uniform_index(rng, 2));
      pop.repair(kid.genes);
      kid.fitness = pop.fitness(kid.genes);
      next.push_back(std::move(kid));
    }
    current.swap(next);
    track(current);
  }

  if (!std::isfinite(best.fitness))
    throw NoFeasibleSolution("genetic_search: no feasible individual found");

  std::vector<std::size_t> members;
  for (std::size_t c = 0; c < C; ++c)
    if (best.genes[c]) members.push_back(c);
  SelectionResult res;
  res.chosen = ConfigSet{std::move(members), params.tau, params.delta};
  res.c_target = res.chosen.size();
  res.objective = objective_value(res.chosen, tables, params);
  res.feasible = is_feasible(res.chosen, tables, params);
  res.strategy = "genetic";
  res.iterations = static_cast<std::uint64_t>(gp.generations);
  return res;
}

}  // namespace irs
