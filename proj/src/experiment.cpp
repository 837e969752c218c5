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

#include "irs/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "irs/error.hpp"
#include "irs/scenario_io.hpp"

namespace irs {

namespace {

bool known_strategy(const std::string& s) {
  return std::find(std::begin(kStrategyNames), std::end(kStrategyNames), s) !=
         std::end(kStrategyNames);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) r[idx[t]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

void ExperimentSpec::validate() const {
  if (strategies.empty()) throw ConfigError("experiment: no strategies given");
  if (c_targets.empty()) throw ConfigError("experiment: empty C^T sweep");
  if (seeds.empty()) throw ConfigError("experiment: no seeds given");
  for (const auto& s : strategies)
    if (!known_strategy(s)) throw ConfigError("experiment: unknown strategy '" + s + "'");
  for (std::size_t c : c_targets)
    if (c == 0) throw ConfigError("experiment: C^T must be >= 1");
  if (!(threshold > 0.0)) throw ConfigError("experiment: threshold must be positive");
  if (tau && !(*tau > 0.0)) throw ConfigError("experiment: tau must be positive");
  if (delta && !(*delta >= 0.0)) throw ConfigError("experiment: delta must be >= 0");
  if (r_min && !(*r_min >= 0.0)) throw ConfigError("experiment: r_min must be >= 0");
  if (mc_samples && *mc_samples < 1) throw ConfigError("experiment: mc_samples must be >= 1");
}

TimeAllocation time_allocation(const ConfigSet& cs, const RateTables& tables, double tau,
                               double threshold) {
  if (cs.members.empty()) throw std::invalid_argument("time_allocation: empty set");
  const auto total = static_cast<std::int64_t>(cs.size());
  std::int64_t above = 0;
  for (std::size_t c : cs.members)
    if (tables.r_hat[c] > threshold) ++above;

  TimeAllocation t;
  const double rounded = std::round(tau);
  if (rounded == tau && tau >= 1.0 && tau < 1e9) {
    // Common denominator (tau + 1) |C|.
    const auto ti = static_cast<std::int64_t>(rounded);
    const double den = static_cast<double>((ti + 1) * total);
    t.high = static_cast<double>(ti * above) / den;
    t.low = static_cast<double>(ti * (total - above)) / den;
    t.sw = static_cast<double>(total) / den;
  } else {
    t.sw = 1.0 / (tau + 1.0);
    t.high = tau / (tau + 1.0) * static_cast<double>(above) / static_cast<double>(total);
    t.low = 1.0 - t.high - t.sw;
  }
  return t;
}

ScenarioConfig experiment_config(const ExperimentSpec& spec) {
  ScenarioConfig cfg = resolve_scenario(spec.scenario);
  if (spec.tau) cfg.tau = *spec.tau;
  if (spec.delta) cfg.delta = *spec.delta;
  if (spec.r_min) cfg.r_min = *spec.r_min;
  if (spec.mc_samples) cfg.mc_samples = *spec.mc_samples;
  cfg.validate();
  return cfg;
}

RateTables seed_tables(const ScenarioConfig& cfg, std::uint64_t seed) {
  const Scenario sc = build_scenario(cfg, seed);
  const auto configs =
      enumerate_configs(cfg.num_irss(), cfg.num_ues(), kDefaultConfigCap, cfg.direct_path);
  return build_tables(sc, configs, cfg.mc_samples, seed);
}

SelectionParams selection_params(const ExperimentSpec& spec, const ScenarioConfig& cfg) {
  SelectionParams p;
  p.tau = cfg.tau;
  p.delta = cfg.delta_or_default();
  p.r_min = cfg.r_min;
  p.ratio_mode = spec.ratio_mode;
  p.genetic = spec.genetic;
  return p;
}

Record run_point(const std::string& strategy, std::size_t c_target, std::uint64_t seed,
                 const RateTables& tables, const SelectionParams& base, double threshold,
                 bool timing) {
  Record rec;
  rec.seed = seed;
  rec.strategy = strategy;
  rec.c_target = c_target;
  SelectionParams params = base;
  params.c_min = c_target;
  params.c_max = c_target;

  const auto start = std::chrono::steady_clock::now();
  try {
    SelectionResult res;
    if (strategy == "parallel_slide") {
      res = parallel_slide(tables, params);
    } else if (strategy == "top_rate") {
      res = top_rate(tables, params, c_target);
    } else if (strategy == "relax") {
      Rng rng = make_stream(seed, Stream::kRounding, c_target);
      res = relax_round(tables, params, c_target, rng);
    } else if (strategy == "genetic") {
      Rng rng = make_stream(seed, Stream::kGenetic, c_target);
      res = genetic_search(tables, params, rng);
    } else if (strategy == "oracle") {
      res = brute_force_oracle(tables, params);
    } else {
      throw ConfigError("unknown strategy '" + strategy + "'");
    }
    rec.ok = true;
    rec.chosen = res.chosen.members;
    rec.objective = res.objective;
    rec.feasible = res.feasible;
    rec.min_avg_rate = worst_avg_rate(res.chosen, tables);
    rec.secrecy = worst_sr_avg(res.chosen, tables);
    rec.time = time_allocation(res.chosen, tables, params.tau, threshold);
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
  }
  if (timing) {
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
  }
  return rec;
}

std::vector<Record> run_experiment(const ExperimentSpec& spec, std::vector<RateTables>* tables_out) {
  spec.validate();
  const ScenarioConfig cfg = experiment_config(spec);
  const std::uint64_t total = count_configs(cfg.num_irss(), cfg.num_ues(), cfg.direct_path);
  for (std::size_t c : spec.c_targets)
    if (c > total)
      throw ConfigError("experiment: C^T " + std::to_string(c) + " exceeds the " +
                        std::to_string(total) + " available configurations");
  const SelectionParams params = selection_params(spec, cfg);
  if (std::count(spec.strategies.begin(), spec.strategies.end(), "oracle") > 0 &&
      total > params.oracle_cap)
    throw ConfigError("experiment: oracle needs at most " + std::to_string(params.oracle_cap) +
                      " configurations, scenario has " + std::to_string(total));

  std::vector<Record> records;
  for (std::uint64_t seed : spec.seeds) {
    const RateTables tables = seed_tables(cfg, seed);
    const std::size_t S = spec.strategies.size();
    const std::size_t T = spec.c_targets.size();
    std::vector<Record> batch(S * T);
    const auto jobs = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t j = 0; j < jobs; ++j) {
      const auto s = static_cast<std::size_t>(j) / T;
      const auto t = static_cast<std::size_t>(j) % T;
      batch[static_cast<std::size_t>(j)] = run_point(spec.strategies[s], spec.c_targets[t], seed,
                                                     tables, params, spec.threshold, spec.timing);
    }
    records.insert(records.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    if (tables_out) tables_out->push_back(tables);
  }
  return records;
}

std::string format_csv(const std::vector<Record>& records) {
  std::string out =
      "seed,strategy,c_target,min_avg_rate_bps,secrecy_bps,objective_bps,feasible,wall_ms,"
      "frac_high,frac_low,frac_switch\n";
  for (const Record& r : records) {
    out += std::to_string(r.seed) + "," + r.strategy + "," + std::to_string(r.c_target) + ",";
    if (r.ok) {
      out += fmt(r.min_avg_rate) + "," + fmt(r.secrecy) + "," + fmt(r.objective) + "," +
             (r.feasible ? "1" : "0") + "," + fmt(r.wall_ms) + "," + fmt(r.time.high) + "," +
             fmt(r.time.low) + "," + fmt(r.time.sw) + "\n";
    } else {
      out += ",,,0," + fmt(r.wall_ms) + ",,,\n";
    }
  }
  return out;
}

void emit_csv(const std::vector<Record>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << format_csv(records);
  if (!out) throw IoError("write failed: " + path.string());
}

void emit_tables_csv(const RateTables& tables, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "config_id,assignment,k,n,rate_bps,sr_bps\n";
  for (std::size_t c = 0; c < tables.num_configs(); ++c) {
    const std::string assignment = tables.configs[c].to_string(tables.num_irss);
    for (std::size_t k = 0; k < tables.num_ues; ++k) {
      for (std::size_t n = 0; n < tables.num_targets; ++n) {
        out << c << ",\"" << assignment << "\"," << k << "," << n << "," << fmt(tables.rate(k, c))
            << "," << fmt(tables.secrecy(n, k, c))
            << "\n";
      }
    }
  }
  if (!out) throw IoError("write failed: " + path.string());
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 2) return NAN;
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return NAN;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<TrendLine> sweep_trends(const std::vector<Record>& records) {
  std::vector<TrendLine> lines;
  std::map<std::pair<std::uint64_t, std::string>, std::size_t> slot;
  std::vector<std::vector<const Record*>> groups;
  for (const Record& r : records) {
    auto [it, fresh] = slot.try_emplace({r.seed, r.strategy}, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(&r);
  }
  for (const auto& g : groups) {
    std::vector<double> c, rate, secrecy;
    for (const Record* r : g) {
      if (!r->ok) continue;
      c.push_back(static_cast<double>(r->c_target));
      rate.push_back(r->min_avg_rate);
      secrecy.push_back(r->secrecy);
    }
    TrendLine t;
    t.seed = g.front()->seed;
    t.strategy = g.front()->strategy;
    t.rate_rho = spearman(c, rate);
    t.secrecy_rho = spearman(c, secrecy);
    t.rate_ok = t.rate_rho <= -0.9;
    t.secrecy_ok = t.secrecy_rho >= 0.7;
    lines.push_back(t);
  }
  return lines;
}

double dominance_share(const std::vector<Record>& records, const std::string& a,
                       const std::string& b) {
  std::map<std::pair<std::uint64_t, std::size_t>, std::pair<const Record*, const Record*>> points;
  for (const Record& r : records) {
    if (r.strategy == a) points[{r.seed, r.c_target}].first = &r;
    if (r.strategy == b) points[{r.seed, r.c_target}].second = &r;
  }
  std::size_t total = 0, wins = 0;
  for (const auto& [key, pair] : points) {
    if (!pair.first || !pair.second) continue;
    ++total;
    if (pair.first->ok && pair.second->ok && pair.first->objective >= pair.second->objective)
      ++wins;
    else if (pair.first->ok && !pair.second->ok)
      ++wins;
  }
  return total == 0 ? NAN : static_cast<double>(wins) / static_cast<double>(total);
}

}  // namespace irs
