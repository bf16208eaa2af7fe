#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kerrswitch/config.hpp"

namespace kerr {

/// P(n_i, n_s) for n_i, n_s in 0..cutoff, row-major in n_i.
class JointPhotonDistribution {
 public:
  JointPhotonDistribution(int cutoff, std::vector<double> probs, double truncated_mass = 0.0);

  int cutoff() const noexcept { return cutoff_; }
  double operator()(int n_idler, int n_signal) const {
    return probs_[static_cast<std::size_t>(n_idler) * (cutoff_ + 1) + n_signal];
  }
  std::span<const double> probs() const noexcept { return probs_; }

  /// Probability mass discarded by the cutoff before renormalisation.
  double truncated_mass() const noexcept { return truncated_mass_; }
  bool cutoff_too_small() const noexcept { return truncated_mass_ >= 1e-6; }

  double total() const;
  double mean_idler() const;
  double mean_signal() const;

 private:
  int cutoff_;
  std::vector<double> probs_;
  double truncated_mass_;
};

/// Output statistics of an N-photon Fock state on the switch: probs[n_S] for
/// n_S = 0..N, with n_U = N - n_S.
struct SplitDistribution {
  int herald = 0;
  std::vector<double> probs;
  std::vector<double> standard_error;  // empty for exact distributions

  double p(int n_switched) const { return probs[static_cast<std::size_t>(n_switched)]; }
};

struct CountRecord {
  std::uint64_t N_Si = 0;  // herald-1 coincidences with the switched port
  std::uint64_t N_Ui = 0;  // herald-1 coincidences with the unswitched port
  std::uint64_t pulses = 0;
  std::uint64_t noise_S = 0;
  std::uint64_t noise_U = 0;
};

/// Perfectly correlated two-mode squeezed vacuum, P(n,n) = m^n / (1+m)^(n+1),
/// renormalised over the cutoff. Check cutoff_too_small() on the result.
JointPhotonDistribution thermal_joint_source(double mean_n, int cutoff);

/// Independent binomial thinning of each arm.
JointPhotonDistribution apply_loss(const JointPhotonDistribution& dist, double t_idler,
                                   double t_signal);

/// C(N, n_S) eta^n_S (1 - eta)^(N - n_S).
SplitDistribution binomial_split(int N, double eta);

/// binomial_split applied to a precomputed eta-versus-delay curve.
std::vector<SplitDistribution> split_vs_delay(std::span<const double> etas, int N);

/// eta(delay) at the config's pump energy over the config's sweep delays, then
/// split for herald N.
std::vector<SplitDistribution> split_vs_delay(const ExperimentConfig& config, int N);

struct EtaEstimate {
  double eta = 0.0;
  double standard_error = 0.0;
};

/// N_Si / (N_Si + N_Ui) with its binomial standard error. Throws NoCoincidences.
EtaEstimate eta_exp(const CountRecord& counts);

/// heralded_prob / noise_per_pulse. Throws ZeroNoise when noise_per_pulse is 0.
double snr(double heralded_prob, double noise_per_pulse);

/// Full width at half maximum of P_{N,0} over delay (linear interpolation).
double fwhm_of_switched_probability(std::span<const double> delays,
                                    std::span<const SplitDistribution> curve);

}  // namespace kerr
