#pragma once

#include <cmath>
#include <cstdint>

namespace kerr {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based random stream. The n-th draw is a pure function of
/// (seed, stream id, n), so any partition of streams over workers reproduces
/// the same numbers.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream_a, std::uint64_t stream_b = 0)
      : key_(splitmix64(splitmix64(splitmix64(seed) ^ stream_a) ^ (stream_b * 0xd1342543de82ef95ULL))) {}

  std::uint64_t next_u64() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  int binomial(int n, double p) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += bernoulli(p) ? 1 : 0;
    return k;
  }

  /// Poisson by sequential inversion; intended for the small per-pulse rates
  /// that occur here.
  int poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    double u = uniform();
    double term = std::exp(-lambda);
    double cdf = term;
    int k = 0;
    while (u >= cdf && k < 10000) {
      ++k;
      term *= lambda / k;
      cdf += term;
      if (term == 0.0) break;
    }
    return k;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace kerr
