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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "irs/ratemodel.hpp"
#include "irs/rng.hpp"
#include "irs/scheduler.hpp"

namespace irs {

// Orientation of the ParallelSlide removal key.
enum class RatioMode {
  kLiteral,  // remove argmin r_hat / s_hat
  kInverse,  // remove argmin s_hat / r_hat
};

struct GeneticParams {
  int generations = 50;
  int population = 100;
  int parents_mating = 4;
  double mutation_probability = 0.15;
};

struct SelectionParams {
  double tau = 10.0;
  double delta = 0.0;
  double r_min = 0.0;  // bit/s
  // Admissible set sizes C^T, clipped to [1, |C|].
  std::size_t c_min = 1;
  std::size_t c_max = std::numeric_limits<std::size_t>::max();
  double epsilon_ratio = 1e-12;
  RatioMode ratio_mode = RatioMode::kLiteral;
  std::size_t oracle_cap = 20;
  GeneticParams genetic;
};

struct SelectionResult {
  ConfigSet chosen;
  std::size_t c_target = 0;
  double objective = 0.0;  // objective_value(chosen)
  bool feasible = false;
  std::string strategy;
  std::uint64_t iterations = 0;  // removals / LP pivots / generations, per strategy
  double lp_value = 0.0;         // relax_round only: optimum of the relaxation
};

// (delta/(tau+1)) mean r_hat + ((tau-delta)/(tau+1)) mean s_hat over members,
// multiplicity included. delta is capped at tau.
double objective_value(const ConfigSet& cs, const RateTables& tables, const SelectionParams& params);

// (tau/(tau+1)) mean r_hat >= r_min (closed, up to 1e-12 relative rounding).
bool is_feasible(const ConfigSet& cs, const RateTables& tables, const SelectionParams& params);

// Weight of a single configuration in the objective for a fixed set size:
// objective_value = sum of weights / |set|.
double objective_weight(std::size_t c, const RateTables& tables, const SelectionParams& params);

// For every admissible C^T (largest first): start from all configurations,
// drop the one with the smallest ratio key until C^T remain, keep the set
// if feasible. Returns the feasible set with the largest objective (smaller
// C^T on ties). Throws NoFeasibleSolution.
SelectionResult parallel_slide(const RateTables& tables, const SelectionParams& params);

// The c_target configurations with the largest r_hat (lower id on ties).
SelectionResult top_rate(const RateTables& tables, const SelectionParams& params,
                         std::size_t c_target);

// LP relaxation for a fixed set size c_target, solved exactly, then
// configurations drawn without replacement with probability proportional to
// the relaxed indicators. Throws InfeasibleLP.
SelectionResult relax_round(const RateTables& tables, const SelectionParams& params,
                            std::size_t c_target, Rng& rng);

// Builds and solves the relaxation used by relax_round; exposed for tests.
std::vector<double> relaxed_indicators(const RateTables& tables, const SelectionParams& params,
                                       std::size_t c_target, double* lp_value = nullptr,
                                       std::size_t* pivots = nullptr);

// Binary-genome genetic search over indicator vectors y(c). Infeasible or
// out-of-range individuals get -inf fitness. Throws NoFeasibleSolution.
SelectionResult genetic_search(const RateTables& tables, const SelectionParams& params, Rng& rng);

// Exhaustive search over all nonempty subsets within the size range.
// Throws SizeGuard when |C| exceeds params.oracle_cap, NoFeasibleSolution
// when nothing is feasible.
SelectionResult brute_force_oracle(const RateTables& tables, const SelectionParams& params);

}  // namespace irs
