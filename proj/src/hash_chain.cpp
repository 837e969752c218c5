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

#include <openssl/sha.h>

#include <array>
#include <stdexcept>

#include "irs/scheduler.hpp"

namespace irs {

std::vector<std::size_t> hash_chain_schedule(std::span<const std::uint8_t> shared_secret,
                                             const ConfigSet& cs, std::size_t length) {
  if (cs.members.empty()) throw std::invalid_argument("hash_chain_schedule: empty set");
  if (length < 1) throw std::invalid_argument("hash_chain_schedule: length must be >= 1");

  const std::uint64_t modulus = cs.size();
  std::array<unsigned char, SHA256_DIGEST_LENGTH> link{};
  SHA256(shared_secret.data(), shared_secret.size(), link.data());

  std::vector<std::size_t> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0) {
      std::array<unsigned char, SHA256_DIGEST_LENGTH> next{};
      SHA256(link.data(), link.size(), next.data());
      link = next;
    }
    std::uint64_t rem = 0;
    for (unsigned char byte : link) rem = ((rem << 8) | byte) % modulus;
    out.push_back(cs.members[rem]);
  }
  return out;
}

}  // namespace irs
