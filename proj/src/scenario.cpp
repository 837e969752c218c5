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

#include "irs/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "irs/error.hpp"

namespace irs {

bool segment_intersects_rect(Vec2 a, Vec2 b, const Rect& r) {
  // Liang-Barsky clipping of the parametric segment a + t (b - a), t in [0, 1].
  const Vec2 d = b - a;
  double t0 = 0.0;
  double t1 = 1.0;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {a.x - r.x_min, r.x_max - a.x, a.y - r.y_min, r.y_max - a.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  return true;
}

double observation_angle(Vec2 source_pos, Vec2 source_normal, Vec2 target_pos) {
  const Vec2 d = target_pos - source_pos;
  const double len = norm(d);
  if (!(len > 0.0)) throw BehindArray("observation_angle: target coincides with the array");
  const Vec2 u = (1.0 / len) * d;
  const Vec2 n = normalized(source_normal);
  const double c = dot(n, u);
  if (!(c > 0.0)) throw BehindArray("observation_angle: target is behind the array plane");
  return std::atan2(cross(n, u), c);
}

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("scenario: " + msg); };
  const Rect room{0.0, 0.0, room_width, room_height};
  if (!(room_width > 0.0 && room_height > 0.0)) fail("room dimensions must be positive");
  if (ues.empty()) fail("at least one UE is required");
  if (irss.size() < ues.size()) fail("need at least as many IRSs as UEs");
  if (bs.antennas < 1 || mn.antennas < 1) fail("antenna counts must be >= 1");
  if (!room.contains(bs.position)) fail("BS outside the room");
  for (std::size_t k = 0; k < ues.size(); ++k) {
    const auto& ue = ues[k];
    if (ue.antennas < 1) fail("UE antenna count must be >= 1");
    if (ue.position) {
      if (!room.contains(*ue.position)) fail("UE " + std::to_string(k) + " outside the room");
    } else if (!ue.region.valid() || !room.contains({ue.region.x_min, ue.region.y_min}) ||
               !room.contains({ue.region.x_max, ue.region.y_max})) {
      fail("UE " + std::to_string(k) + " sampling region not inside the room");
    }
  }
  for (std::size_t n = 0; n < irss.size(); ++n) {
    if (irss[n].side < 1) fail("IRS side count must be >= 1");
    if (!room.contains(irss[n].position)) fail("IRS " + std::to_string(n) + " outside the room");
  }
  if (mn.victim >= ues.size()) fail("eavesdropper victim index out of range");
  if (!(mn.side >= 0.0)) fail("eavesdropper square side must be >= 0");
  if (!(fc > 0.0 && bandwidth > 0.0 && pt > 0.0 && n0 > 0.0)) fail("fc, bandwidth, pt, n0 must be positive");
  if (!pi_weights.empty()) {
    if (pi_weights.size() != ues.size()) fail("pi_weights must have one entry per UE");
    for (double p : pi_weights)
      if (!(p > 0.0)) fail("pi_weights must be positive");
  }
  if (obstacle && !obstacle->valid()) fail("obstacle rectangle is inverted");
  if (!(tau >= 1.0)) fail("tau must be >= 1");
  if (!(delta_or_default() >= 0.0)) fail("delta must be >= 0");
  if (!(r_min >= 0.0)) fail("r_min must be >= 0");
  if (mc_samples < 1) fail("mc_samples must be >= 1");
}

Vec2 sample_mn(Vec2 victim_pos, double side, Rng& rng, double room_width, double room_height) {
  const double h = 0.5 * side;
  const double x = uniform(rng, victim_pos.x - h, victim_pos.x + h);
  const double y = uniform(rng, victim_pos.y - h, victim_pos.y + h);
  return {std::clamp(x, 0.0, room_width), std::clamp(y, 0.0, room_height)};
}

ReceiverView Scenario::make_view(Vec2 pos, Vec2 normal, int antennas, const char* what) const {
  ReceiverView v;
  v.position = pos;
  v.normal = normal;
  v.antennas = antennas;
  v.irs.reserve(irss_.size());
  for (std::size_t n = 0; n < irss_.size(); ++n) {
    const auto& s = irss_[n];
    IrsLink link;
    link.dist = distance(s.position, pos);
    try {
      link.angle_at_irs = observation_angle(s.position, s.normal, pos);
      link.angle_at_rx = observation_angle(pos, normal, s.position);
    } catch (const BehindArray&) {
      throw GeometryError(std::string(what) + " and IRS " + std::to_string(n) +
                          " do not face each other");
    }
    if (cfg_.obstacle && segment_intersects_rect(s.position, pos, *cfg_.obstacle))
      throw GeometryError(std::string("obstacle blocks the link between IRS ") +
                          std::to_string(n) + " and " + what);
    v.irs.push_back(link);
  }
  const Vec2 bs = cfg_.bs.position;
  v.direct.dist = distance(bs, pos);
  const bool blocked = cfg_.obstacle && segment_intersects_rect(bs, pos, *cfg_.obstacle);
  if (!blocked && dot(cfg_.bs.normal, pos - bs) > 0.0 && dot(normal, bs - pos) > 0.0) {
    v.direct.line_of_sight = true;
    v.direct.angle_at_bs = observation_angle(bs, cfg_.bs.normal, pos);
    v.direct.angle_at_rx = observation_angle(pos, normal, bs);
  }
  return v;
}

ReceiverView Scenario::mn_view(Vec2 pos) const {
  return make_view(pos, cfg_.mn.normal, cfg_.mn.antennas, "eavesdropper");
}

Scenario build_scenario(const ScenarioConfig& cfg, std::uint64_t rng_seed) {
  cfg.validate();
  Scenario sc;
  sc.cfg_ = cfg;
  sc.lambda_ = kSpeedOfLight / cfg.fc;

  sc.irss_.reserve(cfg.irss.size());
  for (std::size_t n = 0; n < cfg.irss.size(); ++n) {
    const auto& spec = cfg.irss[n];
    IrsGeometry g;
    g.position = spec.position;
    g.normal = normalized(spec.normal);
    g.side = spec.side;
    g.psi = spec.psi;
    g.area = static_cast<double>(spec.side) * spec.side * sc.lambda_ * sc.lambda_ / 4.0;
    g.dist_bs = distance(cfg.bs.position, spec.position);
    try {
      g.angle_at_bs = observation_angle(cfg.bs.position, cfg.bs.normal, spec.position);
      g.angle_to_bs = observation_angle(spec.position, g.normal, cfg.bs.position);
    } catch (const BehindArray&) {
      throw GeometryError("IRS " + std::to_string(n) + " and the BS do not face each other");
    }
    if (cfg.obstacle && segment_intersects_rect(cfg.bs.position, spec.position, *cfg.obstacle))
      throw GeometryError("obstacle blocks the BS link to IRS " + std::to_string(n));
    sc.irss_.push_back(g);
  }

  Rng ue_rng = make_stream(rng_seed, Stream::kUePlacement);
  sc.ues_.reserve(cfg.ues.size());
  for (std::size_t k = 0; k < cfg.ues.size(); ++k) {
    const auto& spec = cfg.ues[k];
    Vec2 pos;
    if (spec.position) {
      pos = *spec.position;
    } else {
      pos.x = uniform(ue_rng, spec.region.x_min, spec.region.x_max);
      pos.y = uniform(ue_rng, spec.region.y_min, spec.region.y_max);
    }
    const std::string what = "UE " + std::to_string(k);
    sc.ues_.push_back(sc.make_view(pos, normalized(spec.normal), spec.antennas, what.c_str()));
    if (cfg.obstacle && !cfg.direct_path &&
        !segment_intersects_rect(cfg.bs.position, pos, *cfg.obstacle))
      throw GeometryError("obstacle does not block the direct BS path to " + what);
  }

  Rng mn_rng = make_stream(rng_seed, Stream::kReportMn);
  sc.mn_position_ = sample_mn(sc.ues_[cfg.mn.victim].position, cfg.mn.side, mn_rng,
                              cfg.room_width, cfg.room_height);
  return sc;
}

bool operator==(const Scenario& a, const Scenario& b) {
  return a.lambda_ == b.lambda_ && a.irss_ == b.irss_ && a.ues_ == b.ues_ &&
         a.mn_position_ == b.mn_position_;
}

}  // namespace irs
