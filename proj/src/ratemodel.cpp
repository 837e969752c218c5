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

#include "irs/ratemodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irs {

Precoder zf_precoder(const ComplexMat& h_tilde, std::span<const double> pi, double pt) {
  const std::size_t K = h_tilde.cols();
  if (pi.size() != K) throw std::invalid_argument("zf_precoder: one weight per user required");
  ComplexMat w = pinv_wide(h_tilde);
  for (std::size_t k = 0; k < K; ++k) {
    const double s = std::sqrt(pi[k]);
    for (std::size_t m = 0; m < w.rows(); ++m) w(m, k) *= s;
  }
  const double norm_sq = frob_norm_sq(w);
  Precoder p;
  p.mu_sq = pt / norm_sq;
  w *= std::sqrt(p.mu_sq);
  p.gamma = std::move(w);
  return p;
}

std::vector<double> sinr_ue(const Precoder& precoder, std::span<const double> pi, double n0,
                            double b) {
  std::vector<double> out(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) out[k] = precoder.mu_sq * pi[k] / (n0 * b);
  return out;
}

double sinr_mn(const Precoder& precoder, const ComplexMat& b_tilde, std::span<const double> pi,
               std::size_t k, double n0, double b) {
  const ComplexMat& g = precoder.gamma;
  double signal = 0.0;
  double interference = 0.0;
  for (std::size_t h = 0; h < g.cols(); ++h) {
    Complex z{};
    for (std::size_t m = 0; m < g.rows(); ++m) z += std::conj(b_tilde(m, 0)) * g(m, h);
    const double p = pi[h] * std::norm(z);
    if (h == k) {
      signal = p;
    } else {
      interference += p;
    }
  }
  return signal / (interference + n0 * b);
}

double shannon_rate(double sinr, double b) { return b * std::log2(1.0 + sinr); }

double secrecy_rate(double r_kc, double sinr_mn, double b) {
  return std::max(0.0, r_kc - shannon_rate(sinr_mn, b));
}

void RateTables::resize(std::size_t ues, std::size_t targets, std::size_t configs_count) {
  num_ues = ues;
  num_targets = targets;
  r.assign(ues * configs_count, 0.0);
  sr.assign(targets * ues * configs_count, 0.0);
  sr_sem.assign(targets * ues * configs_count, 0.0);
  degenerate.assign(configs_count, 0);
}

void RateTables::finalize() {
  const std::size_t C = num_configs();
  r_hat.assign(C, 0.0);
  s_hat.assign(C, 0.0);
  s_hat_victim.assign(C, 0.0);
  for (std::size_t c = 0; c < C; ++c) {
    double rmin = INFINITY;
    double smin = INFINITY;
    double svictim = INFINITY;
    for (std::size_t k = 0; k < num_ues; ++k) {
      rmin = std::min(rmin, rate(k, c));
      for (std::size_t n = 0; n < num_targets; ++n) {
        smin = std::min(smin, secrecy(n, k, c));
        if (k == victim) svictim = std::min(svictim, secrecy(n, k, c));
      }
    }
    r_hat[c] = num_ues ? rmin : 0.0;
    s_hat[c] = (num_ues && num_targets) ? smin : 0.0;
    s_hat_victim[c] = (num_ues && num_targets) ? svictim : 0.0;
  }
}

}  // namespace irs
