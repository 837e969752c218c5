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

#include <cstdint>
#include <random>

#include "irs/presets.hpp"
#include "irs/ratemodel.hpp"
#include "irs/scenario.hpp"
#include "irs/scheduler.hpp"

namespace irs::test {

// Small room with randomly placed IRSs on the top wall and UEs at fixed
// random points, no obstacle.
inline ScenarioConfig toy_config(std::size_t n_irs, std::size_t n_ue, int side,
                                 std::uint64_t seed, bool direct = false) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(2.0, 38.0);
  std::uniform_real_distribution<double> ue_x(8.0, 32.0);
  std::uniform_real_distribution<double> ue_y(2.0, 8.0);
  ScenarioConfig cfg = room_preset(0, "toy");
  cfg.obstacle.reset();
  cfg.direct_path = direct;
  for (std::size_t n = 0; n < n_irs; ++n)
    cfg.irss.push_back(IrsSpec{{xs(rng), 20.0}, {0.0, -1.0}, side, 0.3 * static_cast<double>(n)});
  for (std::size_t k = 0; k < n_ue; ++k)
    cfg.ues.push_back(UeSpec{Vec2{ue_x(rng), ue_y(rng)}, Rect{}, {0.0, 1.0}, 8});
  cfg.mc_samples = 8;
  return cfg;
}

// Hand-filled tables for selection tests: one UE, one target, rates and
// secrecy given per configuration.
inline RateTables flat_tables(const std::vector<double>& r, const std::vector<double>& s) {
  RateTables t;
  for (std::size_t c = 0; c < r.size(); ++c) t.configs.push_back(Configuration{{0}});
  t.num_irss = 1;
  t.resize(1, 1, r.size());
  for (std::size_t c = 0; c < r.size(); ++c) {
    t.r[c] = r[c];
    t.sr[c] = s[c];
  }
  t.finalize();
  return t;
}

}  // namespace irs::test
