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
#include <vector>

namespace irs {

enum class RowSense { kEqual, kGreaterEqual };

// maximize c^T y  s.t.  A y (=|>=) b,  0 <= y <= upper.
// Dense rows; meant for a handful of constraints over many variables.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<double> upper;
};

struct LpSolution {
  std::vector<double> y;
  double value = 0.0;
  std::size_t iterations = 0;
};

// Two-phase bounded-variable primal simplex (Dantzig pricing, falling back to
// Bland's rule on stalls). Throws InfeasibleLP when no feasible point exists.
LpSolution solve_lp(const LinearProgram& lp, double tol = 1e-9);

}  // namespace irs
