#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kerrswitch/config.hpp"
#include "kerrswitch/photon_statistics.hpp"

namespace kerr {

/// Largest photon number tracked per detector in the outcome histogram;
/// outcomes above it are counted in `overflow`.
inline constexpr int kMaxTrackedPhotons = 12;

struct DelayOutcome {
  double delay = 0.0;
  double eta = 0.0;                // model efficiency used at this delay
  CountRecord counts;
  std::uint64_t pairs_emitted = 0; // ground truth for the source estimator
  std::uint64_t overflow = 0;
  /// joint[h][s][u]: pulses with h heralds, s clicks at D_S, u at D_U.
  std::vector<std::uint64_t> joint;

  std::uint64_t joint_count(int herald, int n_s, int n_u) const;
  /// Pulses with `herald` idler detections and n_S + n_U == herald.
  std::uint64_t postselected_events(int herald) const;
  /// Empirical P_{n_S, N - n_S} among postselected events, with binomial
  /// standard errors. Probabilities are zero when no event was recorded.
  SplitDistribution empirical_split(int herald) const;
  double mean_pairs_per_pulse() const;
};

struct MonteCarloResult {
  std::vector<DelayOutcome> per_delay;
};

/// Emulates the heralded counting experiment over config.sweep.delays:
/// per pulse, draw the pair number from the thermal source, thin idler by the
/// herald efficiency and signal by the pre-switch and detection
/// transmittances, route each surviving signal photon to D_S with probability
/// eta_of_delay(delay), and add Poisson noise clicks on both ports.
///
/// Pulse p at delay index d uses the random stream (seed, d, p), so the result
/// is bit-identical for any `workers` value.
MonteCarloResult monte_carlo_experiment(const ExperimentConfig& config,
                                        const std::function<double(double)>& eta_of_delay,
                                        std::int64_t pulses, std::uint64_t seed,
                                        unsigned workers = 0);

}  // namespace kerr
