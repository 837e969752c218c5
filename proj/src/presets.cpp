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

#include "irs/presets.hpp"

#include <cmath>

namespace irs {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

ScenarioConfig room_preset(std::size_t n, std::string name) {
  ScenarioConfig cfg;
  cfg.name = std::move(name);
  cfg.room_width = 40.0;
  cfg.room_height = 20.0;
  cfg.bs = BsSpec{{0.0, 10.0}, {1.0, 0.0}, 32};
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = cfg.room_width * static_cast<double>(i) / static_cast<double>(n + 1);
    cfg.irss.push_back(IrsSpec{{x, cfg.room_height}, {0.0, -1.0}, 128, 0.0});
  }
  for (std::size_t k = 0; k < n; ++k)
    cfg.ues.push_back(UeSpec{std::nullopt, Rect{10.0, 2.0, 30.0, 6.0}, {0.0, 1.0}, 8});
  cfg.mn = MnSpec{0, 1.0, 8, {0.0, 1.0}};
  cfg.obstacle = Rect{3.0, 0.0, 5.0, 9.5};
  cfg.fc = 100e9;
  cfg.bandwidth = 1e9;
  cfg.pt = dbm_to_watt(10.0);
  cfg.n0 = dbm_to_watt(-174.0);
  cfg.tau = 10.0;
  cfg.mc_samples = 100;
  return cfg;
}

ScenarioConfig base_preset() { return room_preset(6, "base"); }

ScenarioConfig extended_preset() { return room_preset(8, "extended"); }

std::optional<ScenarioConfig> find_preset(std::string_view name) {
  if (name == "base") return base_preset();
  if (name == "extended") return extended_preset();
  if (name == "toy3") return room_preset(3, "toy3");
  return std::nullopt;
}

}  // namespace irs
