#pragma once

#include <complex>
#include <span>
#include <vector>

#include "kerrswitch/time_grid.hpp"

namespace kerr {

using Complex = std::complex<double>;

/// Slowly varying field envelope in units of sqrt(W) on a TimeGrid.
class PulseEnvelope {
 public:
  PulseEnvelope(TimeGrid grid, double center_wavelength, std::vector<Complex> samples);

  /// All-zero envelope.
  static PulseEnvelope zeros(TimeGrid grid, double center_wavelength);

  const TimeGrid& grid() const noexcept { return grid_; }
  double center_wavelength() const noexcept { return center_wavelength_; }
  std::span<const Complex> samples() const noexcept { return samples_; }

  /// |a_k|^2 in watts.
  std::vector<double> power() const;
  double peak_power() const;

 private:
  TimeGrid grid_;
  double center_wavelength_;
  std::vector<Complex> samples_;
};

/// Sum |a_k|^2 dt.
double energy(const PulseEnvelope& p);

/// Same quantity evaluated from the discrete spectrum (Parseval).
double energy_from_spectrum(const PulseEnvelope& p);

/// Peak power of a Gaussian of the given intensity FWHM and energy.
double gaussian_peak_power(double fwhm, double energy);

/// Transform-limited Gaussian centred at `delay`. The envelope is normalised so
/// its discrete energy equals `energy` exactly; when the pulse sits well inside
/// the window the peak power equals gaussian_peak_power(fwhm, energy).
PulseEnvelope make_gaussian_pulse(const TimeGrid& grid, double center_wavelength, double fwhm,
                                  double energy, double delay);

/// Flat-topped super-Gaussian, |a|^2 = P0 exp(-(t/T0)^(2 order)), normalised to
/// `energy`. order = 1 is the ordinary Gaussian.
PulseEnvelope make_super_gaussian_pulse(const TimeGrid& grid, double center_wavelength,
                                        double fwhm, int order, double energy, double delay);

/// Envelope translated by `shift` seconds (band-limited, periodic on the grid).
PulseEnvelope shifted(const PulseEnvelope& p, double shift);

/// Single-photon energy h c / lambda.
double photon_energy(double wavelength);

}  // namespace kerr
