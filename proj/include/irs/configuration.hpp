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
#include <string>
#include <vector>

namespace irs {

// IRS-to-UE assignment: assignment[k] is the IRS serving UE k (0-based).
// With the direct-path extension, the value num_irss stands for "direct
// path, no IRS"; that item may be shared by several UEs.
struct Configuration {
  std::vector<std::size_t> assignment;

  std::size_t num_ues() const { return assignment.size(); }
  std::size_t serving(std::size_t k) const { return assignment[k]; }

  // True if no IRS index below num_irss appears twice and all indices are
  // below num_irss (or equal to it when allow_direct).
  bool valid(std::size_t num_irss, bool allow_direct = false) const;

  // 1-based rendering, "0" for the direct path: "(1 3 2)".
  std::string to_string(std::size_t num_irss) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

}  // namespace irs
