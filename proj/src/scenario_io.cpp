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

#include "irs/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "irs/error.hpp"
#include "irs/presets.hpp"

namespace irs {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ConfigError("scenario file: " + where + ": " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> keys) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || item.key() == k;
    if (!known) bad(where, "unknown key '" + item.key() + "'");
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

Vec2 vec2(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where, "expected [x, y]");
  return {number(j[0], where), number(j[1], where)};
}

Rect rect(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) bad(where, "expected [x_min, y_min, x_max, y_max]");
  return {number(j[0], where), number(j[1], where), number(j[2], where), number(j[3], where)};
}

json to_json(Vec2 v) { return json::array({v.x, v.y}); }
json to_json(const Rect& r) { return json::array({r.x_min, r.y_min, r.x_max, r.y_max}); }

template <typename F>
void read(const json& obj, const char* key, F&& f) {
  if (auto it = obj.find(key); it != obj.end()) f(*it);
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario file: ") + e.what());
  }
  only_keys(root, "root",
            {"name", "room", "bs", "ues", "irss", "mn", "fc_hz", "bandwidth_hz", "pt_w", "pt_dbm",
             "n0_w_per_hz", "n0_dbm_per_hz", "pi_weights", "obstacle", "direct_path",
             "link_scale", "tau", "delta", "r_min_bps", "mc_samples", "seed"});
  if (root.contains("pt_w") && root.contains("pt_dbm")) bad("root", "both pt_w and pt_dbm given");
  if (root.contains("n0_w_per_hz") && root.contains("n0_dbm_per_hz"))
    bad("root", "both n0_w_per_hz and n0_dbm_per_hz given");

  ScenarioConfig cfg;
  read(root, "name", [&](const json& j) {
    if (!j.is_string()) bad("name", "expected a string");
    cfg.name = j.get<std::string>();
  });
  read(root, "room", [&](const json& j) {
    only_keys(j, "room", {"width", "height"});
    read(j, "width", [&](const json& v) { cfg.room_width = number(v, "room.width"); });
    read(j, "height", [&](const json& v) { cfg.room_height = number(v, "room.height"); });
  });
  read(root, "bs", [&](const json& j) {
    only_keys(j, "bs", {"position", "normal", "antennas"});
    read(j, "position", [&](const json& v) { cfg.bs.position = vec2(v, "bs.position"); });
    read(j, "normal", [&](const json& v) { cfg.bs.normal = vec2(v, "bs.normal"); });
    read(j, "antennas", [&](const json& v) { cfg.bs.antennas = integer(v, "bs.antennas"); });
  });
  read(root, "ues", [&](const json& j) {
    if (!j.is_array()) bad("ues", "expected an array");
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string where = "ues[" + std::to_string(k) + "]";
      only_keys(j[k], where, {"position", "region", "normal", "antennas"});
      UeSpec ue;
      read(j[k], "position", [&](const json& v) { ue.position = vec2(v, where + ".position"); });
      read(j[k], "region", [&](const json& v) { ue.region = rect(v, where + ".region"); });
      if (!ue.position && !j[k].contains("region")) bad(where, "needs position or region");
      read(j[k], "normal", [&](const json& v) { ue.normal = vec2(v, where + ".normal"); });
      read(j[k], "antennas", [&](const json& v) { ue.antennas = integer(v, where + ".antennas"); });
      cfg.ues.push_back(ue);
    }
  });
  read(root, "irss", [&](const json& j) {
    if (!j.is_array()) bad("irss", "expected an array");
    for (std::size_t n = 0; n < j.size(); ++n) {
      const std::string where = "irss[" + std::to_string(n) + "]";
      only_keys(j[n], where, {"position", "normal", "side", "psi"});
      if (!j[n].contains("position")) bad(where, "position is required");
      IrsSpec irs;
      irs.position = vec2(j[n]["position"], where + ".position");
      read(j[n], "normal", [&](const json& v) { irs.normal = vec2(v, where + ".normal"); });
      read(j[n], "side", [&](const json& v) { irs.side = integer(v, where + ".side"); });
      read(j[n], "psi", [&](const json& v) { irs.psi = number(v, where + ".psi"); });
      cfg.irss.push_back(irs);
    }
  });
  read(root, "mn", [&](const json& j) {
    only_keys(j, "mn", {"victim", "side", "antennas", "normal"});
    read(j, "victim", [&](const json& v) {
      const int victim = integer(v, "mn.victim");
      if (victim < 0) bad("mn.victim", "must be >= 0");
      cfg.mn.victim = static_cast<std::size_t>(victim);
    });
    read(j, "side", [&](const json& v) { cfg.mn.side = number(v, "mn.side"); });
    read(j, "antennas", [&](const json& v) { cfg.mn.antennas = integer(v, "mn.antennas"); });
    read(j, "normal", [&](const json& v) { cfg.mn.normal = vec2(v, "mn.normal"); });
  });
  read(root, "fc_hz", [&](const json& v) { cfg.fc = number(v, "fc_hz"); });
  read(root, "bandwidth_hz", [&](const json& v) { cfg.bandwidth = number(v, "bandwidth_hz"); });
  read(root, "pt_w", [&](const json& v) { cfg.pt = number(v, "pt_w"); });
  read(root, "pt_dbm", [&](const json& v) { cfg.pt = dbm_to_watt(number(v, "pt_dbm")); });
  read(root, "n0_w_per_hz", [&](const json& v) { cfg.n0 = number(v, "n0_w_per_hz"); });
  read(root, "n0_dbm_per_hz",
       [&](const json& v) { cfg.n0 = dbm_to_watt(number(v, "n0_dbm_per_hz")); });
  read(root, "pi_weights", [&](const json& j) {
    if (!j.is_array()) bad("pi_weights", "expected an array");
    for (const auto& v : j) cfg.pi_weights.push_back(number(v, "pi_weights"));
  });
  read(root, "obstacle", [&](const json& j) {
    if (!j.is_null()) cfg.obstacle = rect(j, "obstacle");
  });
  read(root, "direct_path", [&](const json& j) {
    if (!j.is_boolean()) bad("direct_path", "expected true or false");
    cfg.direct_path = j.get<bool>();
  });
  read(root, "link_scale", [&](const json& j) {
    only_keys(j, "link_scale", {"bs_irs", "irs_ue", "irs_mn", "direct"});
    read(j, "bs_irs", [&](const json& v) { cfg.link_scale.bs_irs = number(v, "link_scale.bs_irs"); });
    read(j, "irs_ue", [&](const json& v) { cfg.link_scale.irs_ue = number(v, "link_scale.irs_ue"); });
    read(j, "irs_mn", [&](const json& v) { cfg.link_scale.irs_mn = number(v, "link_scale.irs_mn"); });
    read(j, "direct", [&](const json& v) { cfg.link_scale.direct = number(v, "link_scale.direct"); });
  });
  read(root, "tau", [&](const json& v) { cfg.tau = number(v, "tau"); });
  read(root, "delta", [&](const json& v) {
    if (!v.is_null()) cfg.delta = number(v, "delta");
  });
  read(root, "r_min_bps", [&](const json& v) { cfg.r_min = number(v, "r_min_bps"); });
  read(root, "mc_samples", [&](const json& v) { cfg.mc_samples = integer(v, "mc_samples"); });
  read(root, "seed", [&](const json& v) {
    if (!v.is_number_unsigned()) bad("seed", "expected a non-negative integer");
    cfg.seed = v.get<std::uint64_t>();
  });

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_scenario(text.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
  json root;
  root["name"] = cfg.name;
  root["room"] = {{"width", cfg.room_width}, {"height", cfg.room_height}};
  root["bs"] = {{"position", to_json(cfg.bs.position)},
                {"normal", to_json(cfg.bs.normal)},
                {"antennas", cfg.bs.antennas}};
  root["ues"] = json::array();
  for (const auto& ue : cfg.ues) {
    json j = {{"normal", to_json(ue.normal)}, {"antennas", ue.antennas}};
    if (ue.position) {
      j["position"] = to_json(*ue.position);
    } else {
      j["region"] = to_json(ue.region);
    }
    root["ues"].push_back(j);
  }
  root["irss"] = json::array();
  for (const auto& irs : cfg.irss)
    root["irss"].push_back({{"position", to_json(irs.position)},
                            {"normal", to_json(irs.normal)},
                            {"side", irs.side},
                            {"psi", irs.psi}});
  root["mn"] = {{"victim", cfg.mn.victim},
                {"side", cfg.mn.side},
                {"antennas", cfg.mn.antennas},
                {"normal", to_json(cfg.mn.normal)}};
  root["fc_hz"] = cfg.fc;
  root["bandwidth_hz"] = cfg.bandwidth;
  root["pt_w"] = cfg.pt;
  root["n0_w_per_hz"] = cfg.n0;
  if (!cfg.pi_weights.empty()) root["pi_weights"] = cfg.pi_weights;
  if (cfg.obstacle) root["obstacle"] = to_json(*cfg.obstacle);
  root["direct_path"] = cfg.direct_path;
  root["link_scale"] = {{"bs_irs", cfg.link_scale.bs_irs},
                        {"irs_ue", cfg.link_scale.irs_ue},
                        {"irs_mn", cfg.link_scale.irs_mn},
                        {"direct", cfg.link_scale.direct}};
  root["tau"] = cfg.tau;
  if (cfg.delta) root["delta"] = *cfg.delta;
  root["r_min_bps"] = cfg.r_min;
  root["mc_samples"] = cfg.mc_samples;
  root["seed"] = cfg.seed;
  return root.dump(2) + "\n";
}

ScenarioConfig resolve_scenario(const std::string& name_or_path) {
  if (auto preset = find_preset(name_or_path)) return *preset;
  return load_scenario(name_or_path);
}

}  // namespace irs
