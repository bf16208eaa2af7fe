#pragma once

#include <cstddef>
#include <vector>

namespace kerr {

/// Uniform, zero-centred time grid with a power-of-two sample count.
/// Sample k sits at t_k = (k - n/2) dt; the conjugate angular-frequency grid
/// is in FFT order with spacing 2 pi / window.
class TimeGrid {
 public:
  static constexpr std::size_t kMinSamples = 64;

  TimeGrid(std::size_t n_samples, double window);

  std::size_t size() const noexcept { return n_; }
  double window() const noexcept { return window_; }
  double dt() const noexcept { return window_ / static_cast<double>(n_); }
  double domega() const noexcept;

  double time(std::size_t k) const noexcept {
    return (static_cast<double>(k) - static_cast<double>(n_ / 2)) * dt();
  }
  /// Angular-frequency offset of FFT bin k (negative frequencies in the upper half).
  double omega(std::size_t k) const noexcept;

  std::vector<double> times() const;
  std::vector<double> omegas() const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  std::size_t n_;
  double window_;
};

}  // namespace kerr
