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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irs/ratemodel.hpp"
#include "irs/scenario.hpp"
#include "irs/scheduler.hpp"
#include "irs/selection.hpp"

namespace irs {

inline constexpr const char* kStrategyNames[] = {"parallel_slide", "top_rate", "relax", "genetic",
                                                 "oracle"};

struct ExperimentSpec {
  std::string scenario = "base";  // preset name or JSON path
  std::vector<std::string> strategies;
  std::vector<std::size_t> c_targets;
  std::vector<std::uint64_t> seeds;
  double threshold = 1e8;  // bit/s, "high rate" cut for time_allocation
  std::optional<double> tau;
  std::optional<double> delta;
  std::optional<double> r_min;
  std::optional<int> mc_samples;
  RatioMode ratio_mode = RatioMode::kLiteral;
  GeneticParams genetic;
  bool timing = false;  // wall_ms stays 0 unless set, keeping CSVs reproducible

  // Throws ConfigError.
  void validate() const;
};

struct TimeAllocation {
  double high = 0.0;
  double low = 0.0;
  double sw = 0.0;
};

struct Record {
  std::uint64_t seed = 0;
  std::string strategy;
  std::size_t c_target = 0;
  bool ok = false;  // false: the strategy threw, numeric fields are meaningless
  std::string error;
  double min_avg_rate = 0.0;
  double secrecy = 0.0;
  double objective = 0.0;
  bool feasible = false;
  double wall_ms = 0.0;
  TimeAllocation time;
  std::vector<std::size_t> chosen;
};

// Fraction of time with rate above threshold, below it, and switching.
TimeAllocation time_allocation(const ConfigSet& cs, const RateTables& tables, double tau,
                               double threshold);

// Scenario config with the ExperimentSpec overrides applied.
ScenarioConfig experiment_config(const ExperimentSpec& spec);

// Tables for one seed: scenario geometry, eavesdropper samples and rates all
// derive from that seed.
RateTables seed_tables(const ScenarioConfig& cfg, std::uint64_t seed);

SelectionParams selection_params(const ExperimentSpec& spec, const ScenarioConfig& cfg);

// Runs one strategy at a fixed C^T and fills a record; strategy errors are
// caught and reported in the record.
Record run_point(const std::string& strategy, std::size_t c_target, std::uint64_t seed,
                 const RateTables& tables, const SelectionParams& params, double threshold,
                 bool timing);

// Records ordered by (seed, strategy in spec order, c_target in spec order).
// tables_out, if given, receives the tables of every seed.
std::vector<Record> run_experiment(const ExperimentSpec& spec,
                                   std::vector<RateTables>* tables_out = nullptr);

std::string format_csv(const std::vector<Record>& records);
void emit_csv(const std::vector<Record>& records, const std::filesystem::path& path);
void emit_tables_csv(const RateTables& tables, const std::filesystem::path& path);

// Spearman rank correlation with average ranks for ties; NaN when either
// series is constant or shorter than 2.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

struct TrendLine {
  std::uint64_t seed = 0;
  std::string strategy;
  double rate_rho = 0.0;
  double secrecy_rho = 0.0;
  bool rate_ok = false;     // rate_rho <= -0.9
  bool secrecy_ok = false;  // secrecy_rho >= 0.7
};

std::vector<TrendLine> sweep_trends(const std::vector<Record>& records);

// Share of (seed, c_target) points where a's objective >= b's objective.
// Points where a errored count as losses for a; b erroring counts as a win.
double dominance_share(const std::vector<Record>& records, const std::string& a,
                       const std::string& b);

}  // namespace irs
