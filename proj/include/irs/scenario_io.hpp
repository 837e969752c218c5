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

#include <filesystem>
#include <string>

#include "irs/scenario.hpp"

namespace irs {

// JSON scenario files; see docs/scenario-format.md. Power fields accept
// either linear ("pt_w", "n0_w_per_hz") or logarithmic ("pt_dbm",
// "n0_dbm_per_hz") units. Throws ConfigError on malformed input.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

std::string scenario_to_json(const ScenarioConfig& cfg);

// Preset name or path to a JSON file.
ScenarioConfig resolve_scenario(const std::string& name_or_path);

}  // namespace irs
