#include "kerrswitch/monte_carlo.hpp"

#include <algorithm>
#include <cmath>

#include "kerrswitch/error.hpp"
#include "kerrswitch/parallel.hpp"
#include "kerrswitch/rng.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

namespace {

constexpr std::size_t kDim = kMaxTrackedPhotons + 1;

std::size_t joint_index(int h, int s, int u) {
  return (static_cast<std::size_t>(h) * kDim + static_cast<std::size_t>(s)) * kDim +
         static_cast<std::size_t>(u);
}

// Tallies are integer sums, so splitting a delay's pulses into any number of
// contiguous groups gives identical totals.

struct Tally {
  CountRecord counts;
  std::uint64_t pairs = 0;
  std::uint64_t overflow = 0;
  std::vector<std::uint64_t> joint = std::vector<std::uint64_t>(kDim * kDim * kDim, 0);

  void merge(const Tally& o) {
    counts.N_Si += o.counts.N_Si;
    counts.N_Ui += o.counts.N_Ui;
    counts.pulses += o.counts.pulses;
    counts.noise_S += o.counts.noise_S;
    counts.noise_U += o.counts.noise_U;
    pairs += o.pairs;
    overflow += o.overflow;
    for (std::size_t i = 0; i < joint.size(); ++i) joint[i] += o.joint[i];
  }
};

}  // namespace

std::uint64_t DelayOutcome::joint_count(int herald, int n_s, int n_u) const {
  if (herald < 0 || n_s < 0 || n_u < 0 || herald > kMaxTrackedPhotons ||
      n_s > kMaxTrackedPhotons || n_u > kMaxTrackedPhotons) {
    return 0;
  }
  return joint[joint_index(herald, n_s, n_u)];
}

std::uint64_t DelayOutcome::postselected_events(int herald) const {
  std::uint64_t total = 0;
  for (int s = 0; s <= herald; ++s) total += joint_count(herald, s, herald - s);
  return total;
}

SplitDistribution DelayOutcome::empirical_split(int herald) const {
  SplitDistribution d;
  d.herald = herald;
  d.probs.assign(static_cast<std::size_t>(herald) + 1, 0.0);
  d.standard_error.assign(static_cast<std::size_t>(herald) + 1, 0.0);
  const auto total = postselected_events(herald);
  if (total == 0) return d;
  const double m = static_cast<double>(total);
  for (int s = 0; s <= herald; ++s) {
    const double p = static_cast<double>(joint_count(herald, s, herald - s)) / m;
    d.probs[static_cast<std::size_t>(s)] = p;
    d.standard_error[static_cast<std::size_t>(s)] = std::sqrt(p * (1.0 - p) / m);
  }
  return d;
}

double DelayOutcome::mean_pairs_per_pulse() const {
  return counts.pulses == 0 ? 0.0
                            : static_cast<double>(pairs_emitted) / static_cast<double>(counts.pulses);
}

MonteCarloResult monte_carlo_experiment(const ExperimentConfig& config,
                                        const std::function<double(double)>& eta_of_delay,
                                        std::int64_t pulses, std::uint64_t seed,
                                        unsigned workers) {
  if (pulses < 1) throw Error(ErrorKind::InvalidArgument, "pulses must be >= 1");
  const auto& delays = config.sweep.delays;

  const JointPhotonDistribution source =
      thermal_joint_source(config.source.mean_photon_number, config.source.max_photon_cutoff);
  std::vector<double> cdf(static_cast<std::size_t>(source.cutoff()) + 1);
  double acc = 0.0;
  for (int n = 0; n <= source.cutoff(); ++n) {
    acc += source(n, n);
    cdf[static_cast<std::size_t>(n)] = acc;
  }
  cdf.back() = 1.0;

  const double t_herald = config.detectors.herald_efficiency;
  const double t_signal = config.detectors.signal_transmittance();
  const double noise_s = config.detectors.effective_noise_S();
  const double noise_u = config.detectors.effective_noise_U();

  std::vector<double> etas(delays.size());
  for (std::size_t d = 0; d < delays.size(); ++d) etas[d] = eta_of_delay(delays[d]);

  const unsigned n_workers = resolve_workers(workers);
  const std::size_t chunks_per_delay = std::clamp<std::size_t>(
      (4 * n_workers + delays.size() - 1) / std::max<std::size_t>(1, delays.size()), 1,
      static_cast<std::size_t>(pulses));
  const std::int64_t chunk_size =
      (pulses + static_cast<std::int64_t>(chunks_per_delay) - 1) /
      static_cast<std::int64_t>(chunks_per_delay);
  std::vector<Tally> tallies(delays.size() * chunks_per_delay);

  parallel_for(tallies.size(), n_workers, [&](std::size_t job) {
    const std::size_t d = job / chunks_per_delay;
    const auto chunk = static_cast<std::int64_t>(job % chunks_per_delay);
    const std::int64_t begin = std::min(pulses, chunk * chunk_size);
    const std::int64_t end = std::min(pulses, begin + chunk_size);
    const double eta = etas[d];
    Tally& t = tallies[job];
    for (std::int64_t p = begin; p < end; ++p) {
      CounterRng rng(seed, d, static_cast<std::uint64_t>(p));
      const double u = rng.uniform();
      const int n = static_cast<int>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      const int pairs = std::min(n, source.cutoff());
      const int heralds = rng.binomial(pairs, t_herald);
      const int arriving = rng.binomial(pairs, t_signal);
      const int switched = rng.binomial(arriving, eta);
      const int noise_switched = rng.poisson(noise_s);
      const int noise_unswitched = rng.poisson(noise_u);
      const int clicks_s = switched + noise_switched;
      const int clicks_u = arriving - switched + noise_unswitched;

      t.counts.pulses += 1;
      t.counts.noise_S += static_cast<std::uint64_t>(noise_switched);
      t.counts.noise_U += static_cast<std::uint64_t>(noise_unswitched);
      t.pairs += static_cast<std::uint64_t>(pairs);
      if (heralds == 1 && clicks_s + clicks_u == 1) {
        (clicks_s == 1 ? t.counts.N_Si : t.counts.N_Ui) += 1;
      }
      if (heralds > kMaxTrackedPhotons || clicks_s > kMaxTrackedPhotons ||
          clicks_u > kMaxTrackedPhotons) {
        t.overflow += 1;
      } else {
        t.joint[joint_index(heralds, clicks_s, clicks_u)] += 1;
      }
    }
  });

  MonteCarloResult result;
  result.per_delay.resize(delays.size());
  for (std::size_t d = 0; d < delays.size(); ++d) {
    Tally merged;
    for (std::size_t c = 0; c < chunks_per_delay; ++c) merged.merge(tallies[d * chunks_per_delay + c]);
    DelayOutcome& out = result.per_delay[d];
    out.delay = delays[d];
    out.eta = etas[d];
    out.counts = merged.counts;
    out.pairs_emitted = merged.pairs;
    out.overflow = merged.overflow;
    out.joint = std::move(merged.joint);
  }
  return result;
}

}  // namespace kerr
