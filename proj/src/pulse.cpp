#include "kerrswitch/pulse.hpp"

#include <algorithm>
#include <cmath>

#include "kerrswitch/error.hpp"
#include "kerrswitch/fft.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

PulseEnvelope::PulseEnvelope(TimeGrid grid, double center_wavelength, std::vector<Complex> samples)
    : grid_(grid), center_wavelength_(center_wavelength), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw Error(ErrorKind::GridMismatch, "sample count does not match the time grid");
  }
  if (!(center_wavelength_ > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "center wavelength must be positive");
  }
}

PulseEnvelope PulseEnvelope::zeros(TimeGrid grid, double center_wavelength) {
  return PulseEnvelope(grid, center_wavelength, std::vector<Complex>(grid.size()));
}

std::vector<double> PulseEnvelope::power() const {
  std::vector<double> p(samples_.size());
  std::transform(samples_.begin(), samples_.end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

double PulseEnvelope::peak_power() const {
  double peak = 0.0;
  for (const auto& a : samples_) peak = std::max(peak, std::norm(a));
  return peak;
}

double energy(const PulseEnvelope& p) {
  double sum = 0.0;
  for (const auto& a : p.samples()) sum += std::norm(a);
  return sum * p.grid().dt();
}

double energy_from_spectrum(const PulseEnvelope& p) {
  Fft fft(p.grid().size());
  auto buf = fft.buffer();
  std::copy(p.samples().begin(), p.samples().end(), buf.begin());
  fft.to_spectrum();
  double sum = 0.0;
  for (const auto& a : buf) sum += std::norm(a);
  return sum * p.grid().dt() / static_cast<double>(p.grid().size());
}

double gaussian_peak_power(double fwhm, double energy) {
  return energy / (fwhm * std::sqrt(units::kPi / (4.0 * std::log(2.0))));
}

namespace {

void check_shape(const TimeGrid& grid, double fwhm, double energy) {
  if (!(fwhm > 0.0)) throw Error(ErrorKind::InvalidArgument, "pulse fwhm must be positive");
  if (fwhm >= grid.window() / 4.0) {
    throw Error(ErrorKind::GridTooSmall, "pulse fwhm must be below a quarter of the grid window");
  }
  if (energy < 0.0) throw Error(ErrorKind::NegativeEnergy, "pulse energy must be non-negative");
}

PulseEnvelope normalised(const TimeGrid& grid, double center_wavelength,
                         std::vector<Complex> samples, double target_energy) {
  PulseEnvelope shape(grid, center_wavelength, std::move(samples));
  const double e = energy(shape);
  if (target_energy == 0.0 || e == 0.0) return PulseEnvelope::zeros(grid, center_wavelength);
  const double scale = std::sqrt(target_energy / e);
  std::vector<Complex> out(shape.samples().begin(), shape.samples().end());
  for (auto& a : out) a *= scale;
  return PulseEnvelope(grid, center_wavelength, std::move(out));
}

}  // namespace

PulseEnvelope make_gaussian_pulse(const TimeGrid& grid, double center_wavelength, double fwhm,
                                  double energy, double delay) {
  return make_super_gaussian_pulse(grid, center_wavelength, fwhm, 1, energy, delay);
}

PulseEnvelope make_super_gaussian_pulse(const TimeGrid& grid, double center_wavelength,
                                        double fwhm, int order, double energy, double delay) {
  check_shape(grid, fwhm, energy);
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "super-Gaussian order must be >= 1");
  // |a|^2 = P0 exp(-(t/T0)^(2m)) is at half maximum where (t/T0)^(2m) = ln 2.
  const double t0 = fwhm / (2.0 * std::pow(std::log(2.0), 1.0 / (2.0 * order)));
  const double p0 = order == 1 ? gaussian_peak_power(fwhm, energy) : 1.0;
  std::vector<Complex> samples(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = (grid.time(k) - delay) / t0;
    samples[k] = std::sqrt(p0) * std::exp(-0.5 * std::pow(x * x, order));
  }
  return normalised(grid, center_wavelength, std::move(samples), energy);
}

PulseEnvelope shifted(const PulseEnvelope& p, double shift) {
  if (shift == 0.0) return p;
  const TimeGrid& grid = p.grid();
  Fft fft(grid.size());
  auto buf = fft.buffer();
  std::copy(p.samples().begin(), p.samples().end(), buf.begin());
  fft.to_spectrum();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    buf[k] *= std::polar(1.0, grid.omega(k) * shift);
  }
  fft.to_time();
  return PulseEnvelope(grid, p.center_wavelength(), std::vector<Complex>(buf.begin(), buf.end()));
}

double photon_energy(double wavelength) {
  return units::kPlanck * units::kSpeedOfLight / wavelength;
}

}  // namespace kerr
