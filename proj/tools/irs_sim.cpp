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

// irs_sim: build rate tables for a scenario, run selection strategies over
// a C^T sweep and write CSV results.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irs/error.hpp"
#include "irs/experiment.hpp"
#include "irs/scenario_io.hpp"

namespace {

// "a..b" or "n".
std::vector<std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const unsigned long v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const unsigned long lo = std::stoul(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const unsigned long hi = std::stoul(hi_text, &used);
    if (used != hi_text.size() || hi < lo) throw std::invalid_argument(text);
    std::vector<std::size_t> out;
    for (unsigned long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  } catch (const std::logic_error&) {
    throw irs::ConfigError("bad --ctarget value '" + text + "' (expected a..b or n)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IRS configuration-cycling simulator"};

  irs::ExperimentSpec spec;
  std::vector<std::string> ctargets{"1..50"};
  std::string out_dir = "out";
  std::string ratio_mode = "literal";
  double tau = 0.0, delta = 0.0, rmin = 0.0;
  int mc = 0;
  bool dump_tables = false;
  bool print_scenario = false;

  app.add_option("--scenario", spec.scenario, "Preset (base, extended, toy3) or JSON file")
      ->capture_default_str();
  app.add_option("--strategy", spec.strategies,
                 "parallel_slide | top_rate | relax | genetic | oracle (repeatable)");
  app.add_option("--ctarget", ctargets, "C^T values: a..b or n (repeatable)")
      ->capture_default_str();
  app.add_option("--seed", spec.seeds, "Seed (repeatable)");
  auto* tau_opt = app.add_option("--tau", tau, "Dwell time per configuration");
  auto* delta_opt = app.add_option("--delta", delta, "Eavesdropper probing time");
  auto* rmin_opt = app.add_option("--rmin", rmin, "Minimum average rate, bit/s");
  auto* mc_opt = app.add_option("--mc-samples", mc, "Eavesdropper placements per victim");
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--ratio-mode", ratio_mode, "ParallelSlide removal key")
      ->check(CLI::IsMember({"literal", "inverse"}))
      ->capture_default_str();
  app.add_option("--threshold", spec.threshold, "High-rate threshold for time fractions, bit/s")
      ->capture_default_str();
  app.add_flag("--dump-tables", dump_tables, "Also write per-seed rate tables");
  app.add_flag("--timing", spec.timing, "Fill wall_ms (makes the CSV run-dependent)");
  app.add_flag("--print-scenario", print_scenario, "Print the resolved scenario as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (print_scenario) {
      std::cout << irs::scenario_to_json(irs::resolve_scenario(spec.scenario));
      return 0;
    }
    if (spec.strategies.empty()) spec.strategies = {"parallel_slide", "top_rate", "relax", "genetic"};
    if (spec.seeds.empty()) spec.seeds = {1};
    for (const auto& c : ctargets) {
      const auto r = parse_range(c);
      spec.c_targets.insert(spec.c_targets.end(), r.begin(), r.end());
    }
    if (*tau_opt) spec.tau = tau;
    if (*delta_opt) spec.delta = delta;
    if (*rmin_opt) spec.r_min = rmin;
    if (*mc_opt) spec.mc_samples = mc;
    spec.ratio_mode = ratio_mode == "inverse" ? irs::RatioMode::kInverse : irs::RatioMode::kLiteral;
    spec.validate();

    std::vector<irs::RateTables> tables;
    const auto records = irs::run_experiment(spec, dump_tables ? &tables : nullptr);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    irs::emit_csv(records, dir / "results.csv");
    for (std::size_t i = 0; i < tables.size(); ++i)
      irs::emit_tables_csv(tables[i], dir / ("tables_seed" + std::to_string(spec.seeds[i]) + ".csv"));

    std::ofstream summary(dir / "summary.txt");
    auto say = [&](const std::string& line) {
      std::cout << line << '\n';
      summary << line << '\n';
    };
    bool errored = false;
    for (const auto& r : records) {
      if (!r.ok) {
        errored = true;
        std::cerr << "seed " << r.seed << " " << r.strategy << " C^T=" << r.c_target << ": "
                  << r.error << '\n';
      }
    }
    char buf[256];
    for (const auto& t : irs::sweep_trends(records)) {
      std::snprintf(buf, sizeof buf,
                    "trend seed=%llu %-14s rate rho=%+.3f %s  secrecy rho=%+.3f %s",
                    static_cast<unsigned long long>(t.seed), t.strategy.c_str(), t.rate_rho,
                    t.rate_ok ? "PASS" : "FAIL", t.secrecy_rho, t.secrecy_ok ? "PASS" : "FAIL");
      say(buf);
    }
    auto has = [&](const char* s) {
      return std::find(spec.strategies.begin(), spec.strategies.end(), s) != spec.strategies.end();
    };
    if (has("parallel_slide") && has("top_rate")) {
      const double share = irs::dominance_share(records, "parallel_slide", "top_rate");
      std::snprintf(buf, sizeof buf, "parallel_slide >= top_rate at %.1f%% of points %s",
                    100.0 * share, share >= 0.9 ? "PASS" : "FAIL");
      say(buf);
    }
    if (has("genetic") && has("parallel_slide")) {
      const double share = irs::dominance_share(records, "genetic", "parallel_slide");
      std::snprintf(buf, sizeof buf, "genetic >= parallel_slide at %.1f%% of points %s",
                    100.0 * share, share >= 0.8 ? "PASS" : "FAIL");
      say(buf);
    }
    return errored ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "irs_sim: " << e.what() << '\n';
    return 1;
  }
}
