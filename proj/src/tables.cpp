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

#include <cmath>
#include <numbers>
#include <vector>

#include "irs/channel.hpp"
#include "irs/error.hpp"
#include "irs/ratemodel.hpp"
#include "irs/rng.hpp"

namespace irs {

std::vector<std::vector<Vec2>> draw_mn_samples(const Scenario& sc, int mc_samples,
                                               std::uint64_t seed) {
  const auto& cfg = sc.config();
  std::vector<std::vector<Vec2>> out(sc.num_ues());
  for (std::size_t k = 0; k < sc.num_ues(); ++k) {
    Rng rng = make_stream(seed, Stream::kMnPlacement, k);
    out[k].reserve(mc_samples);
    for (int s = 0; s < mc_samples; ++s)
      out[k].push_back(
          sample_mn(sc.ue_position(k), cfg.mn.side, rng, cfg.room_width, cfg.room_height));
  }
  return out;
}

namespace {

using CVec = std::vector<Complex>;

CVec to_vec(const ComplexMat& m) { return CVec(m.entries().begin(), m.entries().end()); }

Complex inner(const CVec& a, const CVec& b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

// Running mean / standard error over eavesdropper placements.
struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  double mean(int n) const { return sum / n; }
  double sem(int n) const {
    if (n < 2) return 0.0;
    const double m = sum / n;
    const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1));
    return std::sqrt(var / n);
  }
};

std::vector<double> weights(const ScenarioConfig& cfg) {
  std::vector<double> pi(cfg.num_ues());
  for (std::size_t k = 0; k < pi.size(); ++k) pi[k] = cfg.pi(k);
  return pi;
}

double direct_gain_product(const Scenario& sc, int rx_antennas) {
  const double lambda = sc.lambda();
  return sc.config().bs.antennas * rx_antennas * lambda * lambda / (4.0 * std::numbers::pi);
}

// Link couplings for one receiver position, for every beam choice of that
// receiver and every UE an IRS might be reflecting towards:
//   irs[(beam * N + n) * K + k'] = a1 g1_n a_rx g_rx,n (b_beam^H p_rx,n) AF_n(k')
//   direct[beam]                 = a0 g0 (b_beam^H p_rx,direct)
struct Couplings {
  std::vector<Complex> irs;
  std::vector<Complex> direct;
  CVec q_direct;  // BS signature towards the receiver (direct path only)
};

class CouplingBuilder {
 public:
  explicit CouplingBuilder(const Scenario& sc) : sc_(sc) {
    const auto& cfg = sc.config();
    const std::size_t N = sc.num_irss();
    const std::size_t K = sc.num_ues();
    g1_.resize(N);
    profiles_.resize(N * K);
    for (std::size_t n = 0; n < N; ++n) {
      const auto& irs = sc.irs(n);
      g1_[n] = cfg.link_scale.bs_irs * path_gain(cfg.bs.antennas * irs.area, irs.dist_bs, sc.lambda());
      for (std::size_t k = 0; k < K; ++k) profiles_[n * K + k] = serving_profile(sc, n, k);
    }
  }

  Couplings build(const ReceiverView& view, double link_scale, std::size_t beams) const {
    const auto& cfg = sc_.config();
    const std::size_t N = sc_.num_irss();
    const std::size_t K = sc_.num_ues();
    const bool direct = cfg.direct_path;
    std::vector<CVec> sig(N + (direct ? 1 : 0));
    for (std::size_t n = 0; n < N; ++n)
      sig[n] = to_vec(signature(view.irs[n].angle_at_rx, view.antennas));
    if (direct) sig[N] = to_vec(signature(view.direct.angle_at_rx, view.antennas));

    std::vector<Complex> reflect(N * K);
    std::vector<Complex> g_rx(N);
    for (std::size_t n = 0; n < N; ++n) {
      const auto& irs = sc_.irs(n);
      g_rx[n] = link_scale * path_gain(view.antennas * irs.area, view.irs[n].dist, sc_.lambda());
      for (std::size_t k = 0; k < K; ++k)
        reflect[n * K + k] =
            irs_array_factor(profiles_[n * K + k], irs.angle_to_bs, view.irs[n].angle_at_irs);
    }

    Couplings out;
    out.irs.resize(beams * N * K);
    out.direct.assign(beams, Complex{});
    const bool los = direct && view.direct.line_of_sight;
    Complex g0{};
    if (los) {
      g0 = cfg.link_scale.direct *
           path_gain(direct_gain_product(sc_, view.antennas), view.direct.dist, sc_.lambda());
      out.q_direct = to_vec(signature(view.direct.angle_at_bs, cfg.bs.antennas));
    }
    for (std::size_t beam = 0; beam < beams; ++beam) {
      for (std::size_t n = 0; n < N; ++n) {
        const Complex base = g1_[n] * g_rx[n] * inner(sig[beam], sig[n]);
        for (std::size_t k = 0; k < K; ++k)
          out.irs[(beam * N + n) * K + k] = base * reflect[n * K + k];
      }
      if (los) out.direct[beam] = g0 * inner(sig[beam], sig[N]);
    }
    return out;
  }

 private:
  const Scenario& sc_;
  std::vector<Complex> g1_;
  std::vector<IrsPhaseProfile> profiles_;
};

}  // namespace

RateTables build_tables(const Scenario& sc, std::span<const Configuration> configs,
                        int mc_samples, std::uint64_t seed) {
  const auto& cfg = sc.config();
  const std::size_t N = sc.num_irss();
  const std::size_t K = sc.num_ues();
  const std::size_t T = N + (cfg.direct_path ? 1 : 0);
  const std::size_t M = static_cast<std::size_t>(cfg.bs.antennas);
  const std::size_t C = configs.size();
  const int S = mc_samples;
  const double noise = cfg.n0 * cfg.bandwidth;
  const std::vector<double> pi = weights(cfg);

  RateTables t;
  t.victim = cfg.mn.victim;
  t.num_irss = N;
  t.configs.assign(configs.begin(), configs.end());
  t.resize(K, T, C);

  std::vector<CVec> q1(N);
  for (std::size_t n = 0; n < N; ++n) q1[n] = to_vec(signature(sc.irs(n).angle_at_bs, cfg.bs.antennas));

  const CouplingBuilder builder(sc);
  std::vector<Couplings> ue(K);
  for (std::size_t k = 0; k < K; ++k) ue[k] = builder.build(sc.ue(k), cfg.link_scale.irs_ue, T);

  const auto samples = draw_mn_samples(sc, S, seed);
  std::vector<std::vector<Couplings>> mn(K);
  for (std::size_t k = 0; k < K; ++k) {
    mn[k].reserve(S);
    for (int s = 0; s < S; ++s)
      mn[k].push_back(builder.build(sc.mn_view(samples[k][s]), cfg.link_scale.irs_mn, T));
  }

#pragma omp parallel
  {
    std::vector<std::size_t> served(N);
    std::vector<Complex> q(N * K);
    std::vector<Complex> q0(K);
    std::vector<Complex> z(K);
    std::vector<Moments> moments(T * K);
    ComplexMat h(M, K);

#pragma omp for schedule(dynamic, 4)
    for (std::size_t c = 0; c < C; ++c) {
      const auto& assign = configs[c].assignment;
      std::fill(served.begin(), served.end(), K);
      for (std::size_t k = 0; k < K; ++k)
        if (assign[k] < N) served[assign[k]] = k;

      for (std::size_t k = 0; k < K; ++k) {
        const std::size_t beam = assign[k];
        for (std::size_t m = 0; m < M; ++m) h(m, k) = Complex{};
        for (std::size_t n = 0; n < N; ++n) {
          if (served[n] == K) continue;
          const Complex coef = std::conj(ue[k].irs[(beam * N + n) * K + served[n]]);
          for (std::size_t m = 0; m < M; ++m) h(m, k) += coef * q1[n][m];
        }
        if (!ue[k].q_direct.empty()) {
          const Complex coef = std::conj(ue[k].direct[beam]);
          for (std::size_t m = 0; m < M; ++m) h(m, k) += coef * ue[k].q_direct[m];
        }
      }

      Precoder pre;
      try {
        pre = zf_precoder(h, pi, cfg.pt);
      } catch (const SingularGram&) {
        t.degenerate[c] = 1;
        continue;
      }
      const ComplexMat& g = pre.gamma;
      for (std::size_t k = 0; k < K; ++k)
        t.r[k * C + c] = shannon_rate(pre.mu_sq * pi[k] / noise, cfg.bandwidth);

      // q1_n^H gamma_h for active IRSs.
      for (std::size_t n = 0; n < N; ++n) {
        if (served[n] == K) continue;
        for (std::size_t hh = 0; hh < K; ++hh) {
          Complex acc{};
          for (std::size_t m = 0; m < M; ++m) acc += std::conj(q1[n][m]) * g(m, hh);
          q[n * K + hh] = acc;
        }
      }

      for (std::size_t victim = 0; victim < K; ++victim) {
        const double r_kc = t.r[victim * C + c];
        std::fill(moments.begin(), moments.end(), Moments{});
        for (int s = 0; s < S; ++s) {
          const Couplings& cp = mn[victim][s];
          const bool los = !cp.q_direct.empty();
          if (los) {
            for (std::size_t hh = 0; hh < K; ++hh) {
              Complex acc{};
              for (std::size_t m = 0; m < M; ++m) acc += std::conj(cp.q_direct[m]) * g(m, hh);
              q0[hh] = acc;
            }
          }
          for (std::size_t target = 0; target < T; ++target) {
            std::fill(z.begin(), z.end(), Complex{});
            for (std::size_t n = 0; n < N; ++n) {
              if (served[n] == K) continue;
              const Complex coef = cp.irs[(target * N + n) * K + served[n]];
              for (std::size_t hh = 0; hh < K; ++hh) z[hh] += coef * q[n * K + hh];
            }
            if (los)
              for (std::size_t hh = 0; hh < K; ++hh) z[hh] += cp.direct[target] * q0[hh];
            double interference = 0.0;
            for (std::size_t hh = 0; hh < K; ++hh)
              if (hh != victim) interference += pi[hh] * std::norm(z[hh]);
            const double sinr = pi[victim] * std::norm(z[victim]) / (interference + noise);
            moments[target].add(secrecy_rate(r_kc, sinr, cfg.bandwidth));
          }
        }
        for (std::size_t target = 0; target < T; ++target) {
          const std::size_t idx = (target * K + victim) * C + c;
          t.sr[idx] = moments[target].mean(S);
          t.sr_sem[idx] = moments[target].sem(S);
        }
      }
    }
  }

  t.finalize();
  return t;
}

RateTables build_tables_reference(const Scenario& sc, std::span<const Configuration> configs,
                                  int mc_samples, std::uint64_t seed) {
  const auto& cfg = sc.config();
  const std::size_t N = sc.num_irss();
  const std::size_t K = sc.num_ues();
  const std::size_t T = N + (cfg.direct_path ? 1 : 0);
  const std::size_t C = configs.size();
  const std::vector<double> pi = weights(cfg);
  const auto samples = draw_mn_samples(sc, mc_samples, seed);

  RateTables t;
  t.victim = cfg.mn.victim;
  t.num_irss = N;
  t.configs.assign(configs.begin(), configs.end());
  t.resize(K, T, C);

  for (std::size_t c = 0; c < C; ++c) {
    const Configuration& config = configs[c];
    ComplexMat h(static_cast<std::size_t>(cfg.bs.antennas), K);
    for (std::size_t k = 0; k < K; ++k) {
      const ComplexMat col = effective_channel(sc, config, UeReceiver{k});
      for (std::size_t m = 0; m < h.rows(); ++m) h(m, k) = col(m, 0);
    }
    Precoder pre;
    try {
      pre = zf_precoder(h, pi, cfg.pt);
    } catch (const SingularGram&) {
      t.degenerate[c] = 1;
      continue;
    }
    const auto sinr = sinr_ue(pre, pi, cfg.n0, cfg.bandwidth);
    for (std::size_t k = 0; k < K; ++k) t.r[k * C + c] = shannon_rate(sinr[k], cfg.bandwidth);

    for (std::size_t victim = 0; victim < K; ++victim) {
      for (std::size_t target = 0; target < T; ++target) {
        Moments acc;
        for (const Vec2& pos : samples[victim]) {
          const ComplexMat b = effective_channel(sc, config, MnReceiver{pos, target});
          const double s = sinr_mn(pre, b, pi, victim, cfg.n0, cfg.bandwidth);
          acc.add(secrecy_rate(t.r[victim * C + c], s, cfg.bandwidth));
        }
        const std::size_t idx = (target * K + victim) * C + c;
        t.sr[idx] = acc.mean(mc_samples);
        t.sr_sem[idx] = acc.sem(mc_samples);
      }
    }
  }

  t.finalize();
  return t;
}

}  // namespace irs
