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

#include "irs/complex_mat.hpp"
#include "irs/configuration.hpp"
#include "irs/scenario.hpp"

namespace irs {

// Zero-forcing precoder Gamma = sqrt(Pt) H^+ Pi^{1/2} / ||H^+ Pi^{1/2}||_F.
struct Precoder {
  ComplexMat gamma;    // M_BS x K, column k is gamma_k
  double mu_sq = 0.0;  // Pt / ||H^+ Pi^{1/2}||_F^2; H^H Gamma = sqrt(mu_sq) Pi^{1/2}
};

// h_tilde is M_BS x K with one effective channel per column.
// Throws SingularGram for a degenerate channel.
Precoder zf_precoder(const ComplexMat& h_tilde, std::span<const double> pi, double pt);

// SINR_k = Pt pi_k / (N0 B ||H^+ Pi^{1/2}||_F^2).
std::vector<double> sinr_ue(const Precoder& precoder, std::span<const double> pi, double n0,
                            double b);

// Eavesdropper SINR on stream k given its effective channel b_tilde (M_BS x 1):
// pi_k |b^H gamma_k|^2 / (sum_{h != k} pi_h |b^H gamma_h|^2 + N0 B).
double sinr_mn(const Precoder& precoder, const ComplexMat& b_tilde, std::span<const double> pi,
               std::size_t k, double n0, double b);

// B log2(1 + sinr).
double shannon_rate(double sinr, double b);

// max{0, r_kc - B log2(1 + sinr_mn)}.
double secrecy_rate(double r_kc, double sinr_mn, double b);

// Per-configuration rates, the only input the selection strategies consume.
struct RateTables {
  std::size_t num_ues = 0;
  std::size_t num_irss = 0;
  std::size_t num_targets = 0;  // IRSs an eavesdropper can point at (+1 with direct path)
  std::size_t victim = 0;       // k* used for the reporting column s_hat_victim
  std::vector<Configuration> configs;

  std::vector<double> r;       // [k][c], bit/s
  std::vector<double> sr;      // [n][k][c], bit/s, mean over eavesdropper placements
  std::vector<double> sr_sem;  // [n][k][c], standard error of that mean
  std::vector<double> r_hat;   // [c] min_k r
  std::vector<double> s_hat;   // [c] min_k min_n sr (worst-case victim)
  std::vector<double> s_hat_victim;  // [c] min_n sr for k* only
  std::vector<char> degenerate;      // [c] singular Gram: all rates forced to 0

  std::size_t num_configs() const { return configs.size(); }
  double rate(std::size_t k, std::size_t c) const { return r[k * num_configs() + c]; }
  double secrecy(std::size_t n, std::size_t k, std::size_t c) const {
    return sr[(n * num_ues + k) * num_configs() + c];
  }
  double secrecy_sem(std::size_t n, std::size_t k, std::size_t c) const {
    return sr_sem[(n * num_ues + k) * num_configs() + c];
  }

  // Allocates zeroed r / sr for the given shape.
  void resize(std::size_t ues, std::size_t targets, std::size_t configs_count);
  // Recomputes r_hat, s_hat and s_hat_victim from r and sr.
  void finalize();
};

// Eavesdropper placements for each victim k: samples[k][s], drawn once per
// victim and shared by every configuration.
std::vector<std::vector<Vec2>> draw_mn_samples(const Scenario& sc, int mc_samples,
                                               std::uint64_t seed);

// Fills the rate tables for every configuration. Parallel over configurations
// (OpenMP); output does not depend on the thread count.
RateTables build_tables(const Scenario& sc, std::span<const Configuration> configs,
                        int mc_samples, std::uint64_t seed);

// Serial reference: evaluates every receiver through effective_channel and
// the public precoder/SINR functions. Same output as build_tables up to
// rounding; kept for tests and benchmarks.
RateTables build_tables_reference(const Scenario& sc, std::span<const Configuration> configs,
                                  int mc_samples, std::uint64_t seed);

}  // namespace irs
