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

#include "irs/scheduler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "irs/error.hpp"

namespace irs {

namespace {

void require_nonempty(const ConfigSet& cs) {
  if (cs.members.empty()) throw std::invalid_argument("configuration set is empty");
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out = saturating_mul(out, n - i);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

std::uint64_t count_configs(std::size_t n, std::size_t k, bool allow_direct) {
  if (k > n && !allow_direct) return 0;
  if (!allow_direct) return falling_factorial(n, k);
  // j UEs on the direct path, the rest on distinct IRSs.
  std::uint64_t total = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    if (k - j > n) continue;
    const std::uint64_t term = saturating_mul(binomial(k, j), falling_factorial(n, k - j));
    total = term > UINT64_MAX - total ? UINT64_MAX : total + term;
  }
  return total;
}

std::vector<Configuration> enumerate_configs(std::size_t n, std::size_t k, std::size_t cap,
                                             bool allow_direct) {
  if (k < 1 || (n < k && !allow_direct))
    throw std::invalid_argument("enumerate_configs: need n >= k >= 1");
  const std::uint64_t total = count_configs(n, k, allow_direct);
  if (total > cap)
    throw SizeGuard("enumerate_configs: " + std::to_string(total) +
                    " configurations exceed the cap of " + std::to_string(cap));

  std::vector<Configuration> out;
  out.reserve(total);
  const std::size_t items = n + (allow_direct ? 1 : 0);
  std::vector<std::size_t> current(k);
  std::vector<bool> used(n, false);

  // Depth-first in lexicographic order.
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      out.push_back(Configuration{current});
      return;
    }
    for (std::size_t item = 0; item < items; ++item) {
      const bool is_direct = item == n;
      if (!is_direct && used[item]) continue;
      current[depth] = item;
      if (!is_direct) used[item] = true;
      self(self, depth + 1);
      if (!is_direct) used[item] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

Fraction omega(std::size_t k, std::size_t n, const ConfigSet& cs, const RateTables& tables) {
  require_nonempty(cs);
  std::int64_t count = 0;
  for (std::size_t c : cs.members)
    if (tables.configs[c].serving(k) == n) ++count;
  return {count, static_cast<std::int64_t>(cs.size())};
}

double avg_rate(std::size_t k, const ConfigSet& cs, const RateTables& tables) {
  require_nonempty(cs);
  double sum = 0.0;
  for (std::size_t c : cs.members) sum += tables.rate(k, c);
  return cs.tau / (cs.tau + 1.0) * sum / static_cast<double>(cs.size());
}

std::size_t static_target(std::size_t k_star, const ConfigSet& cs, const RateTables& tables) {
  require_nonempty(cs);
  std::vector<std::size_t> counts(tables.num_targets, 0);
  for (std::size_t c : cs.members) {
    const std::size_t n = tables.configs[c].serving(k_star);
    if (n < counts.size()) ++counts[n];
  }
  // max_element returns the first maximum, i.e. the lowest index on ties.
  return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

double sr_static(std::size_t k_star, const ConfigSet& cs, const RateTables& tables) {
  const std::size_t target = static_target(k_star, cs, tables);
  double sum = 0.0;
  for (std::size_t c : cs.members) sum += tables.secrecy(target, k_star, c);
  return sum / static_cast<double>(cs.size());
}

double sr_dynamic(std::size_t k_star, const ConfigSet& cs, const RateTables& tables) {
  require_nonempty(cs);
  const double tau = cs.tau;
  const double delta = cs.delta;
  double sum = 0.0;
  for (std::size_t c : cs.members) {
    const double rate = tables.rate(k_star, c);
    if (delta <= tau) {
      double worst = rate;
      for (std::size_t n = 0; n < tables.num_targets; ++n)
        worst = std::min(worst, tables.secrecy(n, k_star, c));
      sum += (tau - delta) / tau * worst + delta / tau * rate;
    } else {
      sum += rate;
    }
  }
  return sum / static_cast<double>(cs.size());
}

double sr_avg(std::size_t k_star, const ConfigSet& cs, const RateTables& tables) {
  return std::min(sr_static(k_star, cs, tables), sr_dynamic(k_star, cs, tables));
}

double worst_sr_avg(const ConfigSet& cs, const RateTables& tables) {
  double out = INFINITY;
  for (std::size_t k = 0; k < tables.num_ues; ++k) out = std::min(out, sr_avg(k, cs, tables));
  return out;
}

double worst_avg_rate(const ConfigSet& cs, const RateTables& tables) {
  double out = INFINITY;
  for (std::size_t k = 0; k < tables.num_ues; ++k) out = std::min(out, avg_rate(k, cs, tables));
  return out;
}

}  // namespace irs
