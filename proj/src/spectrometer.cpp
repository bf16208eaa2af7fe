#include "kerrswitch/spectrometer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kerrswitch/error.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

namespace {
constexpr double kSupportFloor = 1e-12;
}

void TofSpec::validate() const {
  if (dispersion == 0.0 || !std::isfinite(dispersion)) {
    throw Error(ErrorKind::ValidationError, "spectrometer dispersion must be non-zero");
  }
  if (!(jitter_fwhm >= 0.0)) {
    throw Error(ErrorKind::ValidationError, "spectrometer jitter must be non-negative");
  }
  if (!(reference_wavelength > 0.0)) {
    throw Error(ErrorKind::ValidationError, "reference wavelength must be positive");
  }
}

double arrival_time(const TofSpec& spec, double wavelength) {
  return spec.dispersion * (wavelength - spec.reference_wavelength);
}

TofHistogram spectrum_to_histogram(const TofSpec& spec, const Spectrum& spectrum,
                                   double bin_width) {
  spec.validate();
  if (!(bin_width > 0.0)) throw Error(ErrorKind::InvalidArgument, "bin width must be positive");
  if (spectrum.wavelength_nm.size() != spectrum.density.size() || spectrum.density.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "spectrum needs at least two samples");
  }

  // Arrival-time samples with density per second, ordered by time.
  const double jacobian = 1.0 / (std::abs(spec.dispersion) * units::kNano);  // (1/nm) -> (1/s)
  std::vector<std::pair<double, double>> pts;
  pts.reserve(spectrum.density.size());
  for (std::size_t i = 0; i < spectrum.density.size(); ++i) {
    pts.emplace_back(arrival_time(spec, spectrum.wavelength_nm[i] * units::kNano),
                     spectrum.density[i] * jacobian);
  }
  std::sort(pts.begin(), pts.end());

  // Support of the density: outermost samples above a floor relative to the
  // peak, widened by one sample so the interpolant's ramps are kept. FFT
  // spectra have numerically non-zero tails reaching absurd wavelengths.
  double peak = 0.0;
  for (const auto& [_, d] : pts) peak = std::max(peak, d);
  if (!(peak > 0.0)) throw Error(ErrorKind::ZeroEnergy, "spectrum has no mass");
  const double floor = kSupportFloor * peak;
  std::size_t lo = 0;
  while (pts[lo].second < floor) ++lo;
  std::size_t hi = pts.size() - 1;
  while (pts[hi].second < floor) --hi;
  const double t_lo = pts[lo > 0 ? lo - 1 : lo].first;
  const double t_hi = pts[hi + 1 < pts.size() ? hi + 1 : hi].first;
  if ((t_hi - t_lo) / bin_width < 4.0) {
    throw Error(ErrorKind::DegenerateBins, "spectrum support spans fewer than 4 bins");
  }

  const double sigma_j = spec.jitter_fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
  const double pad = 6.0 * sigma_j + bin_width;
  const auto k_lo = static_cast<long>(std::floor((t_lo - pad) / bin_width));
  const auto k_hi = static_cast<long>(std::ceil((t_hi + pad) / bin_width));

  TofHistogram h;
  h.bin_width = bin_width;
  const auto n_bins = static_cast<std::size_t>(k_hi - k_lo + 1);
  h.time.resize(n_bins);
  std::vector<double> raw(n_bins, 0.0);
  std::size_t seg = 0;
  for (std::size_t b = 0; b < n_bins; ++b) {
    const double t = static_cast<double>(k_lo + static_cast<long>(b)) * bin_width;
    h.time[b] = t;
    if (t < t_lo || t > t_hi) continue;
    while (seg + 2 < pts.size() && pts[seg + 1].first < t) ++seg;
    const auto& [t0, d0] = pts[seg];
    const auto& [t1, d1] = pts[seg + 1];
    raw[b] = t1 > t0 ? d0 + (d1 - d0) * (t - t0) / (t1 - t0) : 0.5 * (d0 + d1);
  }

  if (sigma_j > 0.0) {
    const auto half = static_cast<long>(std::ceil(6.0 * sigma_j / bin_width));
    std::vector<double> kernel(static_cast<std::size_t>(2 * half + 1));
    double ksum = 0.0;
    for (long j = -half; j <= half; ++j) {
      const double x = j * bin_width / sigma_j;
      kernel[static_cast<std::size_t>(j + half)] = std::exp(-0.5 * x * x);
      ksum += kernel[static_cast<std::size_t>(j + half)];
    }
    for (auto& k : kernel) k /= ksum;
    std::vector<double> conv(n_bins, 0.0);
    for (std::size_t b = 0; b < n_bins; ++b) {
      if (raw[b] == 0.0) continue;
      for (long j = -half; j <= half; ++j) {
        const long target = static_cast<long>(b) + j;
        if (target < 0 || target >= static_cast<long>(n_bins)) continue;
        conv[static_cast<std::size_t>(target)] += raw[b] * kernel[static_cast<std::size_t>(j + half)];
      }
    }
    raw = std::move(conv);
  }

  double mass = 0.0;
  for (double v : raw) mass += v * bin_width;
  if (!(mass > 0.0)) throw Error(ErrorKind::DegenerateBins, "no mass landed on the bins");
  h.density.resize(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) h.density[b] = raw[b] / mass;
  return h;
}

double total_variation(const TofHistogram& a, const TofHistogram& b) {
  if (std::abs(a.bin_width - b.bin_width) > 1e-12 * std::max(a.bin_width, b.bin_width)) {
    throw Error(ErrorKind::InvalidArgument, "histograms use different bin widths");
  }
  std::map<long, double> diff;
  for (std::size_t i = 0; i < a.time.size(); ++i) {
    diff[std::lround(a.time[i] / a.bin_width)] += a.density[i] * a.bin_width;
  }
  for (std::size_t i = 0; i < b.time.size(); ++i) {
    diff[std::lround(b.time[i] / b.bin_width)] -= b.density[i] * b.bin_width;
  }
  double l1 = 0.0;
  for (const auto& [_, v] : diff) l1 += std::abs(v);
  return 0.5 * l1;
}

}  // namespace kerr
