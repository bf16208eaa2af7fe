#include "kerrswitch/photon_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kerrswitch/error.hpp"
#include "kerrswitch/switch_model.hpp"

namespace kerr {

JointPhotonDistribution::JointPhotonDistribution(int cutoff, std::vector<double> probs,
                                                 double truncated_mass)
    : cutoff_(cutoff), probs_(std::move(probs)), truncated_mass_(truncated_mass) {
  if (cutoff_ < 0 ||
      probs_.size() != static_cast<std::size_t>(cutoff_ + 1) * static_cast<std::size_t>(cutoff_ + 1)) {
    throw Error(ErrorKind::InvalidArgument, "joint distribution size does not match its cutoff");
  }
}

double JointPhotonDistribution::total() const {
  return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

double JointPhotonDistribution::mean_idler() const {
  double m = 0.0;
  for (int i = 0; i <= cutoff_; ++i)
    for (int s = 0; s <= cutoff_; ++s) m += i * (*this)(i, s);
  return m;
}

double JointPhotonDistribution::mean_signal() const {
  double m = 0.0;
  for (int i = 0; i <= cutoff_; ++i)
    for (int s = 0; s <= cutoff_; ++s) m += s * (*this)(i, s);
  return m;
}

JointPhotonDistribution thermal_joint_source(double mean_n, int cutoff) {
  if (!(mean_n >= 0.0) || !std::isfinite(mean_n)) {
    throw Error(ErrorKind::InvalidArgument, "mean photon number must be non-negative");
  }
  if (cutoff < 1) throw Error(ErrorKind::InvalidArgument, "photon cutoff must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(cutoff) + 1;
  std::vector<double> probs(dim * dim, 0.0);
  const double ratio = mean_n / (1.0 + mean_n);
  double term = 1.0 / (1.0 + mean_n);
  double kept = 0.0;
  for (std::size_t n = 0; n < dim; ++n) {
    probs[n * dim + n] = term;
    kept += term;
    term *= ratio;
  }
  // Mass beyond the cutoff is ratio^(cutoff+1), the geometric tail.
  const double truncated = std::pow(ratio, cutoff + 1);
  for (auto& p : probs) p /= kept;
  return JointPhotonDistribution(cutoff, std::move(probs), truncated);
}

namespace {

// row[k][j] = C(k, j) t^j (1-t)^(k-j).
std::vector<std::vector<double>> binomial_table(int max_n, double t) {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(max_n) + 1);
  for (int k = 0; k <= max_n; ++k) {
    auto& row = table[static_cast<std::size_t>(k)];
    row.resize(static_cast<std::size_t>(k) + 1);
    const SplitDistribution split = binomial_split(k, t);
    std::copy(split.probs.begin(), split.probs.end(), row.begin());
  }
  return table;
}

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

JointPhotonDistribution apply_loss(const JointPhotonDistribution& dist, double t_idler,
                                   double t_signal) {
  if (!(t_idler >= 0.0 && t_idler <= 1.0) || !(t_signal >= 0.0 && t_signal <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "transmittances must lie in [0, 1]");
  }
  const int c = dist.cutoff();
  const std::size_t dim = static_cast<std::size_t>(c) + 1;
  const auto idler = binomial_table(c, t_idler);
  const auto signal = binomial_table(c, t_signal);

  // Thin the signal arm, then the idler arm.
  std::vector<double> mid(dim * dim, 0.0);
  for (int i = 0; i <= c; ++i) {
    for (int s = 0; s <= c; ++s) {
      const double p = dist(i, s);
      if (p == 0.0) continue;
      for (int k = 0; k <= s; ++k) mid[i * dim + k] += p * signal[s][k];
    }
  }
  std::vector<double> out(dim * dim, 0.0);
  for (int i = 0; i <= c; ++i) {
    for (int k = 0; k <= c; ++k) {
      const double p = mid[i * dim + k];
      if (p == 0.0) continue;
      for (int j = 0; j <= i; ++j) out[j * dim + k] += p * idler[i][j];
    }
  }
  const double total = std::accumulate(out.begin(), out.end(), 0.0);
  for (auto& p : out) p /= total;
  return JointPhotonDistribution(c, std::move(out), dist.truncated_mass());
}

SplitDistribution binomial_split(int N, double eta) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "photon number must be non-negative");
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "splitting ratio must lie in [0, 1]");
  }
  SplitDistribution d;
  d.herald = N;
  d.probs.resize(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    d.probs[static_cast<std::size_t>(k)] =
        binomial_coefficient(N, k) * std::pow(eta, k) * std::pow(1.0 - eta, N - k);
  }
  return d;
}

std::vector<SplitDistribution> split_vs_delay(std::span<const double> etas, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "herald number must be >= 1");
  std::vector<SplitDistribution> out;
  out.reserve(etas.size());
  for (double eta : etas) out.push_back(binomial_split(N, eta));
  return out;
}

std::vector<SplitDistribution> split_vs_delay(const ExperimentConfig& config, int N) {
  if (config.sweep.delays.empty()) {
    throw Error(ErrorKind::InvalidArgument, "sweep delays must be non-empty");
  }
  const auto etas = delay_curve(config, config.pump.energy, config.sweep.delays);
  return split_vs_delay(etas, N);
}

EtaEstimate eta_exp(const CountRecord& counts) {
  const auto total = counts.N_Si + counts.N_Ui;
  if (total == 0) throw Error(ErrorKind::NoCoincidences, "no herald-signal coincidences recorded");
  const double eta = static_cast<double>(counts.N_Si) / static_cast<double>(total);
  return {eta, std::sqrt(eta * (1.0 - eta) / static_cast<double>(total))};
}

double snr(double heralded_prob, double noise_per_pulse) {
  if (noise_per_pulse == 0.0) {
    throw Error(ErrorKind::ZeroNoise, "noise-limited SNR undefined for zero noise");
  }
  if (!(noise_per_pulse > 0.0)) throw Error(ErrorKind::InvalidArgument, "noise must be positive");
  return heralded_prob / noise_per_pulse;
}

double fwhm_of_switched_probability(std::span<const double> delays,
                                    std::span<const SplitDistribution> curve) {
  std::vector<double> x(delays.begin(), delays.end());
  std::vector<double> y;
  y.reserve(curve.size());
  for (const auto& d : curve) y.push_back(d.probs.back());
  return full_width_half_max(x, y);
}

}  // namespace kerr
