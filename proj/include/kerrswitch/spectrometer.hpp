#pragma once

#include <vector>

#include "kerrswitch/spectrum.hpp"

namespace kerr {

/// Time-of-flight spectrometer: a dispersive element mapping wavelength
/// linearly to arrival time, followed by a detector with Gaussian jitter.
struct TofSpec {
  double dispersion;            // s per m of wavelength (1 ps/nm = 1e-3 s/m)
  double reference_wavelength;  // m
  double jitter_fwhm = 0.0;     // s

  void validate() const;
};

/// D (lambda - lambda_ref).
double arrival_time(const TofSpec& spec, double wavelength);

struct TofHistogram {
  std::vector<double> time;     // bin centres, s
  std::vector<double> density;  // 1/s, unit area
  double bin_width = 0.0;
};

/// Maps a wavelength density onto arrival time (Jacobian 1/|D|), bins it on
/// bin centres k * bin_width, convolves with the jitter Gaussian and
/// renormalises. Throws DegenerateBins if the support spans fewer than 4 bins.
TofHistogram spectrum_to_histogram(const TofSpec& spec, const Spectrum& spectrum,
                                   double bin_width);

/// Half the L1 distance between two histograms on possibly different bin
/// ranges (bin widths must match).
double total_variation(const TofHistogram& a, const TofHistogram& b);

}  // namespace kerr
