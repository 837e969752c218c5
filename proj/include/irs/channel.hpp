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
#include <variant>

#include "irs/complex_mat.hpp"
#include "irs/configuration.hpp"
#include "irs/scenario.hpp"

namespace irs {

// Spatial signature of a lambda/2-spaced ULA of m elements seen at angle beta:
// [s]_i = m^{-1/2} exp(-j pi (m-1) sin(beta) / 2) exp(-j pi i sin(beta)), i = 0..m-1.
ComplexMat signature(double beta, int m);

// sqrt(G S / (4 pi d^2)) exp(j 2 pi d / lambda), with gain_product = G S.
Complex path_gain(double gain_product, double distance, double lambda);

// Steering parameter q that makes an IRS reflect a wave arriving at phi1
// towards phi2.
double reflection_param(double phi1, double phi2);

// Linear phase profile of an L x L IRS. The shift depends on the row index
// only: theta_l = pi q (l - (L-1)/2) + psi, l = 0..L-1.
struct IrsPhaseProfile {
  int side = 1;
  double q_param = 0.0;
  double psi = 0.0;

  double theta(int l) const;
};

// Dense L^2 x L^2 diagonal kron(I_L, diag(exp(j theta_l))).
ComplexMat irs_phase_matrix(const IrsPhaseProfile& profile);

// Reflection gain of the surface: sbar(angle_out, L)^H Theta sbar(angle_in, L).
// Equals q_out^H Thetabar p_in for the Kronecker-structured full signatures.
Complex irs_array_factor(const IrsPhaseProfile& profile, double angle_in, double angle_out);

// Phase profile IRS n uses when reflecting the BS signal towards UE k.
IrsPhaseProfile serving_profile(const Scenario& sc, std::size_t n, std::size_t k);

struct UeReceiver {
  std::size_t ue = 0;
};

// Eavesdropper at position, steering its array at IRS target (or at the BS
// when target == num_irss and the direct path is modelled).
struct MnReceiver {
  Vec2 position;
  std::size_t target = 0;
};

using Receiver = std::variant<UeReceiver, MnReceiver>;

// M_BS x 1 vector h such that the received sample is h^H t + noise.
// Evaluated through the rank-1 factorisation of every link; IRSs not used by
// the configuration do not reflect.
ComplexMat effective_channel(const Scenario& sc, const Configuration& config,
                             const Receiver& rx);

// Same quantity from explicit L^2-sized channel matrices and phase matrices.
// Only meant for cross-checking; throws std::invalid_argument for L > 16.
ComplexMat effective_channel_dense(const Scenario& sc, const Configuration& config,
                                   const Receiver& rx);

// Rank-1 LoS link a g p q^H in factored form.
struct Rank1Channel {
  double a = 1.0;
  Complex g;
  ComplexMat p;  // receive signature, unit norm
  ComplexMat q;  // transmit signature, unit norm

  ComplexMat dense() const;
};

}  // namespace irs
