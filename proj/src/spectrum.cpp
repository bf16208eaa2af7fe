#include "kerrswitch/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kerrswitch/error.hpp"
#include "kerrswitch/fft.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

namespace {

// |A(w)|^2 in FFT order.
std::vector<double> spectral_power(const PulseEnvelope& p) {
  Fft fft(p.grid().size());
  auto buf = fft.buffer();
  std::copy(p.samples().begin(), p.samples().end(), buf.begin());
  fft.to_spectrum();
  std::vector<double> s(buf.size());
  for (std::size_t k = 0; k < buf.size(); ++k) s[k] = std::norm(buf[k]);
  return s;
}

}  // namespace

FrequencySpectrum frequency_spectrum(const PulseEnvelope& p) {
  const auto power = spectral_power(p);
  const TimeGrid& grid = p.grid();
  const std::size_t n = grid.size();
  FrequencySpectrum out;
  out.frequency_hz.resize(n);
  out.density.resize(n);
  const double peak = *std::max_element(power.begin(), power.end());
  // Bins n/2..n-1 are the negative frequencies; rotate so frequency ascends.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = (i + n / 2) % n;
    out.frequency_hz[i] = grid.omega(k) / (2.0 * units::kPi);
    out.density[i] = peak > 0.0 ? power[k] / peak : 0.0;
  }
  return out;
}

Spectrum power_spectrum(const PulseEnvelope& p) {
  if (energy(p) == 0.0) throw Error(ErrorKind::ZeroEnergy, "spectrum of an all-zero envelope");
  const auto power = spectral_power(p);
  const TimeGrid& grid = p.grid();
  const double omega0 = 2.0 * units::kPi * units::kSpeedOfLight / p.center_wavelength();

  struct Sample {
    double lambda_nm;
    double density;
  };
  std::vector<Sample> samples;
  samples.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double omega = omega0 + grid.omega(k);
    if (omega <= 0.0) continue;
    const double lambda = 2.0 * units::kPi * units::kSpeedOfLight / omega;
    // S_lambda = S_omega |d omega / d lambda| = S_omega 2 pi c / lambda^2.
    const double jacobian = 2.0 * units::kPi * units::kSpeedOfLight / (lambda * lambda);
    samples.push_back({lambda / units::kNano, power[k] * jacobian});
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.lambda_nm < b.lambda_nm; });

  Spectrum out;
  out.wavelength_nm.reserve(samples.size());
  out.density.reserve(samples.size());
  for (const auto& s : samples) {
    out.wavelength_nm.push_back(s.lambda_nm);
    out.density.push_back(s.density);
  }
  double area = 0.0;
  for (std::size_t i = 1; i < out.density.size(); ++i) {
    area += 0.5 * (out.density[i] + out.density[i - 1]) *
            (out.wavelength_nm[i] - out.wavelength_nm[i - 1]);
  }
  for (auto& d : out.density) d /= area;
  return out;
}

Spectrum pump_spectrum(const PulseEnvelope& p) { return power_spectrum(p); }

double full_width_half_max(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 3 || x.size() != y.size()) return 0.0;
  const auto peak_it = std::max_element(y.begin(), y.end());
  const double half = 0.5 * *peak_it;
  if (!(*peak_it > 0.0)) return 0.0;

  std::size_t first = 0;
  while (y[first] < half) ++first;
  std::size_t last = y.size() - 1;
  while (y[last] < half) --last;

  auto crossing = [&](std::size_t below, std::size_t above) {
    const double frac = (half - y[below]) / (y[above] - y[below]);
    return x[below] + frac * (x[above] - x[below]);
  };
  const double left = first == 0 ? x.front() : crossing(first - 1, first);
  const double right = last + 1 == y.size() ? x.back() : crossing(last + 1, last);
  return right - left;
}

double spectral_fwhm_hz(const PulseEnvelope& p) {
  const auto s = frequency_spectrum(p);
  return full_width_half_max(s.frequency_hz, s.density);
}

double spectral_fwhm_nm(const Spectrum& s) { return full_width_half_max(s.wavelength_nm, s.density); }

double temporal_fwhm(const PulseEnvelope& p) { return full_width_half_max(p.grid().times(), p.power()); }

}  // namespace kerr
