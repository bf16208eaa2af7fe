#include "kerrswitch/time_grid.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "kerrswitch/error.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

TimeGrid::TimeGrid(std::size_t n_samples, double window) : n_(n_samples), window_(window) {
  if (n_ < kMinSamples || !std::has_single_bit(n_)) {
    throw Error(ErrorKind::ValidationError,
                "grid n_samples must be a power of two >= 64, got " + std::to_string(n_));
  }
  if (!(window_ > 0.0) || !std::isfinite(window_)) {
    throw Error(ErrorKind::ValidationError, "grid window must be positive");
  }
}

double TimeGrid::domega() const noexcept { return 2.0 * units::kPi / window_; }

double TimeGrid::omega(std::size_t k) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(n_);
  auto idx = static_cast<std::ptrdiff_t>(k);
  if (idx >= n / 2) idx -= n;
  return static_cast<double>(idx) * domega();
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> t(n_);
  for (std::size_t k = 0; k < n_; ++k) t[k] = time(k);
  return t;
}

std::vector<double> TimeGrid::omegas() const {
  std::vector<double> w(n_);
  for (std::size_t k = 0; k < n_; ++k) w[k] = omega(k);
  return w;
}

}  // namespace kerr
