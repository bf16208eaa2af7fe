#pragma once

#include <vector>

#include "kerrswitch/pulse.hpp"

namespace kerr {

/// Spectral density against absolute wavelength. Wavelengths ascend; density
/// is per nm and integrates (trapezoid) to one.
struct Spectrum {
  std::vector<double> wavelength_nm;
  std::vector<double> density;
};

/// Power spectrum of an envelope mapped onto wavelength about its centre.
/// Throws ZeroEnergy for an all-zero envelope.
Spectrum power_spectrum(const PulseEnvelope& p);

/// Same as power_spectrum; named for its use on the pump output.
Spectrum pump_spectrum(const PulseEnvelope& p);

/// |A(w)|^2 against frequency offset in Hz, ascending, peak-normalised.
struct FrequencySpectrum {
  std::vector<double> frequency_hz;
  std::vector<double> density;
};
FrequencySpectrum frequency_spectrum(const PulseEnvelope& p);

/// Full width at half maximum between the outermost half-maximum crossings,
/// linearly interpolated. Returns 0 for fewer than three samples or a
/// non-positive maximum.
double full_width_half_max(const std::vector<double>& x, const std::vector<double>& y);

double spectral_fwhm_hz(const PulseEnvelope& p);
double spectral_fwhm_nm(const Spectrum& s);

/// Intensity FWHM of an envelope in seconds.
double temporal_fwhm(const PulseEnvelope& p);

}  // namespace kerr
