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

#include "irs/channel.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace irs {

bool Configuration::valid(std::size_t num_irss, bool allow_direct) const {
  std::vector<bool> used(num_irss, false);
  for (std::size_t n : assignment) {
    if (n == num_irss && allow_direct) continue;
    if (n >= num_irss || used[n]) return false;
    used[n] = true;
  }
  return true;
}

std::string Configuration::to_string(std::size_t num_irss) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (k) os << ' ';
    os << (assignment[k] == num_irss ? 0 : assignment[k] + 1);
  }
  os << ')';
  return os.str();
}

ComplexMat signature(double beta, int m) {
  using std::numbers::pi;
  const double s = std::sin(beta);
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  const Complex common = std::polar(amp, -pi * (m - 1) * s / 2.0);
  ComplexMat out(static_cast<std::size_t>(m), 1);
  for (int i = 0; i < m; ++i) out(i, 0) = common * std::polar(1.0, -pi * i * s);
  return out;
}

Complex path_gain(double gain_product, double distance, double lambda) {
  using std::numbers::pi;
  const double mag = std::sqrt(gain_product / (4.0 * pi * distance * distance));
  return std::polar(mag, 2.0 * pi * distance / lambda);
}

double reflection_param(double phi1, double phi2) { return std::sin(phi1) - std::sin(phi2); }

double IrsPhaseProfile::theta(int l) const {
  return std::numbers::pi * q_param * (l - (side - 1) / 2.0) + psi;
}

ComplexMat irs_phase_matrix(const IrsPhaseProfile& profile) {
  std::vector<Complex> diag(profile.side);
  for (int l = 0; l < profile.side; ++l) diag[l] = std::polar(1.0, profile.theta(l));
  return kron(ComplexMat::identity(profile.side), ComplexMat::diagonal(diag));
}

Complex irs_array_factor(const IrsPhaseProfile& profile, double angle_in, double angle_out) {
  using std::numbers::pi;
  const int L = profile.side;
  const double s_in = std::sin(angle_in);
  const double s_out = std::sin(angle_out);
  // conj(sbar_out)_l * e^{j theta_l} * sbar_in_l, summed over l.
  Complex acc{};
  for (int l = 0; l < L; ++l) {
    const double phase = pi * (L - 1) * (s_out - s_in) / 2.0 + pi * l * (s_out - s_in) +
                         profile.theta(l);
    acc += std::polar(1.0, phase);
  }
  return acc / static_cast<double>(L);
}

IrsPhaseProfile serving_profile(const Scenario& sc, std::size_t n, std::size_t k) {
  const auto& irs = sc.irs(n);
  return {irs.side, reflection_param(irs.angle_to_bs, sc.irs_ue(n, k).angle_at_irs), irs.psi};
}

ComplexMat Rank1Channel::dense() const {
  ComplexMat out = p * q.adjoint();
  out *= a * g;
  return out;
}

namespace {

struct ReceiverSide {
  ReceiverView view;
  ComplexMat beam;      // f or b
  double link_scale;    // a for the IRS -> receiver links
};

ReceiverSide resolve_receiver(const Scenario& sc, const Configuration& config,
                              const Receiver& rx) {
  const std::size_t N = sc.num_irss();
  ReceiverSide side;
  std::size_t target = 0;
  if (const auto* ue = std::get_if<UeReceiver>(&rx)) {
    side.view = sc.ue(ue->ue);
    side.link_scale = sc.config().link_scale.irs_ue;
    target = config.serving(ue->ue);
  } else {
    const auto& mn = std::get<MnReceiver>(rx);
    side.view = sc.mn_view(mn.position);
    side.link_scale = sc.config().link_scale.irs_mn;
    target = mn.target;
  }
  if (target == N) {
    if (!sc.config().direct_path) throw std::invalid_argument("direct path is not modelled");
    side.beam = signature(side.view.direct.angle_at_rx, side.view.antennas);
  } else if (target < N) {
    side.beam = signature(side.view.irs[target].angle_at_rx, side.view.antennas);
  } else {
    throw std::out_of_range("receiver target index out of range");
  }
  return side;
}

// served[n] = UE reflected by IRS n under config, if any.
std::vector<std::optional<std::size_t>> served_ues(const Configuration& config, std::size_t N) {
  std::vector<std::optional<std::size_t>> served(N);
  for (std::size_t k = 0; k < config.num_ues(); ++k)
    if (config.serving(k) < N) served[config.serving(k)] = k;
  return served;
}

Complex inner(const ComplexMat& a, const ComplexMat& b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.rows(); ++i) acc += std::conj(a(i, 0)) * b(i, 0);
  return acc;
}

double direct_gain_product(const Scenario& sc, int rx_antennas) {
  const double lambda = sc.lambda();
  return sc.config().bs.antennas * rx_antennas * lambda * lambda / (4.0 * std::numbers::pi);
}

}  // namespace

ComplexMat effective_channel(const Scenario& sc, const Configuration& config,
                             const Receiver& rx) {
  const std::size_t N = sc.num_irss();
  const auto& cfg = sc.config();
  const int m_bs = cfg.bs.antennas;
  const ReceiverSide side = resolve_receiver(sc, config, rx);
  const auto served = served_ues(config, N);

  ComplexMat h(static_cast<std::size_t>(m_bs), 1);
  for (std::size_t n = 0; n < N; ++n) {
    if (!served[n]) continue;
    const auto& irs = sc.irs(n);
    const auto& link = side.view.irs[n];
    const Complex g1 = path_gain(m_bs * irs.area, irs.dist_bs, sc.lambda());
    const Complex g2 = path_gain(side.view.antennas * irs.area, link.dist, sc.lambda());
    const Complex rx_gain = inner(side.beam, signature(link.angle_at_rx, side.view.antennas));
    const Complex reflect =
        irs_array_factor(serving_profile(sc, n, *served[n]), irs.angle_to_bs, link.angle_at_irs);
    const Complex coef = cfg.link_scale.bs_irs * g1 * side.link_scale * g2 * rx_gain * reflect;
    h += std::conj(coef) * signature(irs.angle_at_bs, m_bs);
  }
  if (cfg.direct_path && side.view.direct.line_of_sight) {
    const auto& d = side.view.direct;
    const Complex g0 = path_gain(direct_gain_product(sc, side.view.antennas), d.dist, sc.lambda());
    const Complex rx_gain = inner(side.beam, signature(d.angle_at_rx, side.view.antennas));
    const Complex coef = cfg.link_scale.direct * g0 * rx_gain;
    h += std::conj(coef) * signature(d.angle_at_bs, m_bs);
  }
  return h;
}

ComplexMat effective_channel_dense(const Scenario& sc, const Configuration& config,
                                   const Receiver& rx) {
  const std::size_t N = sc.num_irss();
  const auto& cfg = sc.config();
  const int m_bs = cfg.bs.antennas;
  const ReceiverSide side = resolve_receiver(sc, config, rx);
  const auto served = served_ues(config, N);
  const int m_rx = side.view.antennas;

  // Row vector f^H sum_n H2 Thetabar H1.
  ComplexMat acc(1, static_cast<std::size_t>(m_bs));
  for (std::size_t n = 0; n < N; ++n) {
    if (!served[n]) continue;
    const auto& irs = sc.irs(n);
    const int L = irs.side;
    if (L > 16) throw std::invalid_argument("effective_channel_dense: IRS side above 16");
    const ComplexMat ones = ComplexMat::column(std::vector<Complex>(L, 1.0 / std::sqrt(double(L))));
    const auto& link = side.view.irs[n];

    const Rank1Channel h1{cfg.link_scale.bs_irs,
                          path_gain(m_bs * irs.area, irs.dist_bs, sc.lambda()),
                          kron(ones, signature(irs.angle_to_bs, L)),
                          signature(irs.angle_at_bs, m_bs)};
    const Rank1Channel h2{side.link_scale,
                          path_gain(m_rx * irs.area, link.dist, sc.lambda()),
                          signature(link.angle_at_rx, m_rx),
                          kron(ones, signature(link.angle_at_irs, L))};
    const ComplexMat theta = irs_phase_matrix(serving_profile(sc, n, *served[n]));
    acc += side.beam.adjoint() * h2.dense() * theta * h1.dense();
  }
  if (cfg.direct_path && side.view.direct.line_of_sight) {
    const auto& d = side.view.direct;
    const Rank1Channel h0{cfg.link_scale.direct,
                          path_gain(direct_gain_product(sc, m_rx), d.dist, sc.lambda()),
                          signature(d.angle_at_rx, m_rx), signature(d.angle_at_bs, m_bs)};
    acc += side.beam.adjoint() * h0.dense();
  }
  return acc.adjoint();
}

}  // namespace irs
