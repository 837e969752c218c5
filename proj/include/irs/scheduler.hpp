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
#include <span>
#include <vector>

#include "irs/configuration.hpp"
#include "irs/ratemodel.hpp"

namespace irs {

inline constexpr std::size_t kDefaultConfigCap = 1'000'000;

// All injective UE -> IRS maps in lexicographic order: n!/(n-k)! entries.
// With allow_direct, the extra item n (direct path) may serve any number of
// UEs. Throws SizeGuard when the count would exceed cap.
std::vector<Configuration> enumerate_configs(std::size_t n, std::size_t k,
                                             std::size_t cap = kDefaultConfigCap,
                                             bool allow_direct = false);

// Number of configurations enumerate_configs would produce (saturating).
std::uint64_t count_configs(std::size_t n, std::size_t k, bool allow_direct = false);

// Multiset of selected configuration ids cycled with equal dwell tau, plus
// the eavesdropper's probing time delta. Units are switching times.
struct ConfigSet {
  std::vector<std::size_t> members;
  double tau = 10.0;
  double delta = 0.0;

  std::size_t size() const { return members.size(); }
};

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(Fraction a, Fraction b) { return a.num * b.den == b.num * a.den; }
};

// Probability that UE k is served through target n (count over members,
// multiplicity included). n == num_irss is the direct path.
Fraction omega(std::size_t k, std::size_t n, const ConfigSet& cs, const RateTables& tables);

// (tau / (tau + 1)) * mean over members of R(k, c).
double avg_rate(std::size_t k, const ConfigSet& cs, const RateTables& tables);

// Eavesdropper parked on the IRS that serves k_star most often (lowest index on ties).
std::size_t static_target(std::size_t k_star, const ConfigSet& cs, const RateTables& tables);
double sr_static(std::size_t k_star, const ConfigSet& cs, const RateTables& tables);

// Eavesdropper spending delta units per dwell probing every IRS.
double sr_dynamic(std::size_t k_star, const ConfigSet& cs, const RateTables& tables);

// min(sr_static, sr_dynamic).
double sr_avg(std::size_t k_star, const ConfigSet& cs, const RateTables& tables);

// Secrecy seen by the worst-off UE: min_k sr_avg(k).
double worst_sr_avg(const ConfigSet& cs, const RateTables& tables);
// Rate seen by the worst-off UE: min_k avg_rate(k).
double worst_avg_rate(const ConfigSet& cs, const RateTables& tables);

// Configuration sequence derived from a SHA-256 hash chain seeded with
// shared_secret: h_1 = SHA256(secret), h_{i+1} = SHA256(h_i); step i plays
// member h_i mod |members| (h_i read as a big-endian integer).
std::vector<std::size_t> hash_chain_schedule(std::span<const std::uint8_t> shared_secret,
                                             const ConfigSet& cs, std::size_t length);

}  // namespace irs
