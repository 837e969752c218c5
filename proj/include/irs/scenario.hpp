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
#include <optional>
#include <string>
#include <vector>

#include "irs/geometry.hpp"
#include "irs/rng.hpp"

namespace irs {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

struct BsSpec {
  Vec2 position;
  Vec2 normal{1.0, 0.0};
  int antennas = 32;
};

// A UE either sits at a fixed position or is drawn uniformly from region.
struct UeSpec {
  std::optional<Vec2> position;
  Rect region;
  Vec2 normal{0.0, 1.0};
  int antennas = 8;
};

struct IrsSpec {
  Vec2 position;
  Vec2 normal{0.0, -1.0};
  int side = 128;     // L: the surface is L x L meta-atoms
  double psi = 0.0;   // common phase offset, radians
};

struct MnSpec {
  std::size_t victim = 0;  // k*, 0-based UE index
  double side = 1.0;       // eavesdropper sampling square, meters
  int antennas = 8;
  Vec2 normal{0.0, 1.0};
};

// Large-scale coefficients a per link class (1 = unobstructed).
struct LinkScale {
  double bs_irs = 1.0;
  double irs_ue = 1.0;
  double irs_mn = 1.0;
  double direct = 1.0;
};

// Declarative description of a room. Units: meters, Hz, watts, W/Hz.
struct ScenarioConfig {
  std::string name = "custom";
  double room_width = 40.0;
  double room_height = 20.0;
  BsSpec bs;
  std::vector<UeSpec> ues;
  std::vector<IrsSpec> irss;
  MnSpec mn;
  double fc = 100e9;
  double bandwidth = 1e9;
  double pt = 0.01;
  double n0 = 3.981071705534973e-21;
  std::vector<double> pi_weights;  // empty means all ones
  std::optional<Rect> obstacle;
  bool direct_path = false;
  LinkScale link_scale;
  double tau = 10.0;
  std::optional<double> delta;  // defaults to the number of IRSs
  double r_min = 0.0;
  int mc_samples = 100;
  std::uint64_t seed = 1;

  std::size_t num_ues() const { return ues.size(); }
  std::size_t num_irss() const { return irss.size(); }
  double delta_or_default() const { return delta.value_or(static_cast<double>(irss.size())); }
  double pi(std::size_t k) const { return pi_weights.empty() ? 1.0 : pi_weights[k]; }

  // Throws ConfigError when an invariant is violated.
  void validate() const;
};

// Geometry of one IRS relative to the base station.
struct IrsGeometry {
  Vec2 position;
  Vec2 normal;
  int side = 0;
  double psi = 0.0;
  double area = 0.0;         // L^2 lambda^2 / 4
  double dist_bs = 0.0;      // d1
  double angle_at_bs = 0.0;  // beta: IRS seen from the BS array
  double angle_to_bs = 0.0;  // phi1: BS seen from the IRS

  bool operator==(const IrsGeometry&) const = default;
};

// Geometry of one IRS -> receiver link.
struct IrsLink {
  double dist = 0.0;
  double angle_at_irs = 0.0;  // phi2 / phi3: receiver seen from the IRS
  double angle_at_rx = 0.0;   // alpha / eta: IRS seen from the receiver array

  bool operator==(const IrsLink&) const = default;
};

// Direct BS -> receiver link, used only with the direct-path extension.
struct DirectLink {
  bool line_of_sight = false;
  double dist = 0.0;
  double angle_at_bs = 0.0;
  double angle_at_rx = 0.0;

  bool operator==(const DirectLink&) const = default;
};

// Receiver-side view of the room from an arbitrary position.
struct ReceiverView {
  Vec2 position;
  Vec2 normal;
  int antennas = 0;
  std::vector<IrsLink> irs;  // one per IRS
  DirectLink direct;

  bool operator==(const ReceiverView&) const = default;
};

// Resolved, immutable geometry.
class Scenario {
 public:
  const ScenarioConfig& config() const { return cfg_; }
  std::size_t num_ues() const { return ues_.size(); }
  std::size_t num_irss() const { return irss_.size(); }
  double lambda() const { return lambda_; }

  const IrsGeometry& irs(std::size_t n) const { return irss_[n]; }
  const ReceiverView& ue(std::size_t k) const { return ues_[k]; }
  Vec2 ue_position(std::size_t k) const { return ues_[k].position; }
  const IrsLink& irs_ue(std::size_t n, std::size_t k) const { return ues_[k].irs[n]; }

  // A representative eavesdropper placement drawn at build time.
  Vec2 mn_position() const { return mn_position_; }

  // Geometry seen by an eavesdropper at pos, using the MN array spec.
  // Throws GeometryError if some IRS is not in front of it or vice versa.
  ReceiverView mn_view(Vec2 pos) const;

  friend Scenario build_scenario(const ScenarioConfig& cfg, std::uint64_t rng_seed);
  friend bool operator==(const Scenario& a, const Scenario& b);

 private:
  ReceiverView make_view(Vec2 pos, Vec2 normal, int antennas, const char* what) const;

  ScenarioConfig cfg_;
  double lambda_ = 0.0;
  std::vector<IrsGeometry> irss_;
  std::vector<ReceiverView> ues_;
  Vec2 mn_position_;
};

// Resolves UE positions (drawn from their regions with rng_seed), distances
// and angles. Throws GeometryError when an IRS cannot see the BS or a UE, or
// when a declared obstacle fails to block a BS-UE path without direct-path mode.
Scenario build_scenario(const ScenarioConfig& cfg, std::uint64_t rng_seed);

// Uniform point in the square of the given side centred on victim_pos,
// clipped to the room [0, width] x [0, height].
Vec2 sample_mn(Vec2 victim_pos, double side, Rng& rng, double room_width, double room_height);

bool operator==(const Scenario& a, const Scenario& b);

}  // namespace irs
