#pragma once

namespace kerr {

/// Parameters of the switching fiber, SI units.
struct FiberSpec {
  double length = 0.24;              // m
  double beta2_pump = 19e-27;        // s^2/m
  double beta3_pump = 0.0;           // s^3/m
  double beta2_signal = -25e-27;     // s^2/m
  double walkoff = 2.0e-12 / 0.24;   // s/m, pump drifts to later signal-frame times
  double n2 = 2.6e-20;               // m^2/W
  double a_eff = 4.4e-11;            // m^2
  double alpha = 0.0;                // 1/m, power loss

  /// (1 - exp(-alpha L)) / alpha, or L when lossless.
  double effective_length() const;

  /// Throws ValidationError if an invariant is broken.
  void validate() const;

  friend bool operator==(const FiberSpec&, const FiberSpec&) = default;
};

/// Angle between signal and pump polarizations, in [0, pi/2].
struct PolarizationGeometry {
  double theta = 0.7853981633974483;  // pi/4

  void validate() const;

  friend bool operator==(const PolarizationGeometry&, const PolarizationGeometry&) = default;
};

/// SPM coefficient 2 pi n2 / (lambda a_eff) in 1/(W m).
double kerr_gamma(double n2, double wavelength, double a_eff);

}  // namespace kerr
