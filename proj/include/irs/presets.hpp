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
#include <optional>
#include <string>
#include <string_view>

#include "irs/scenario.hpp"

namespace irs {

// 40 m x 20 m room, BS on the left wall, n IRSs evenly spaced on the top
// wall, n UEs drawn from a strip behind an obstacle that blocks every
// direct BS -> UE path.
ScenarioConfig room_preset(std::size_t n, std::string name = "room");

ScenarioConfig base_preset();      // N = K = 6
ScenarioConfig extended_preset();  // N = K = 8

// "base" | "extended" | "toy3" (N = K = 3); nullopt otherwise.
std::optional<ScenarioConfig> find_preset(std::string_view name);

// dBm -> W and dBm/Hz -> W/Hz.
double dbm_to_watt(double dbm);

}  // namespace irs
