#pragma once

#include <vector>

#include "kerrswitch/fiber.hpp"
#include "kerrswitch/pulse.hpp"

namespace kerr {

/// Output of one pump/signal propagation through the switching fiber. All
/// envelopes live in the signal's co-moving frame.
struct PropagationResult {
  PulseEnvelope pump_in;     // pump as launched, in the signal frame
  PulseEnvelope pump_out;
  PulseEnvelope signal_out;
  std::vector<double> xpm_phase;        // differential phase seen by the signal, rad
  int steps_taken = 0;
  std::vector<double> per_step_energy;  // pump energy at each nonlinear sub-step, J
  double delay = 0.0;                   // s
};

/// Symmetric split-step propagation of the pump (GVD, TOD, SPM, loss, walk-off
/// relative to the signal) with accumulation of the XPM differential phase
///
///     dPhi(t) += (8 pi n2 / (3 lambda_s a_eff)) |A_p(z, t)|^2 dz
///
/// on the signal time axis. The signal envelope itself only receives its own
/// linear dispersion and loss.
///
/// Delay convention: with delay = 0 the pump and signal centres coincide at
/// mid-fiber, i.e. the pump enters at (delay - walkoff L / 2) relative to its
/// own envelope position and leaves at (delay + walkoff L / 2).
///
/// Throws GridMismatch if the envelopes are on different grids, InvalidArgument
/// if steps < 8.
PropagationResult propagate(const PulseEnvelope& pump, const PulseEnvelope& signal,
                            const FiberSpec& fiber, double delay, int steps);

/// propagate at `steps` and 2*steps; returns the finer result, or throws
/// NonConvergence if the XPM phase profiles differ by more than `tolerance` rad.
PropagationResult propagate_checked(const PulseEnvelope& pump, const PulseEnvelope& signal,
                                    const FiberSpec& fiber, double delay, int steps,
                                    double tolerance = 1e-3);

/// Largest pointwise difference between two phase profiles.
double max_phase_residual(const std::vector<double>& a, const std::vector<double>& b);

/// Real profile translated by `shift` seconds, band-limited and periodic on the
/// grid. Returns the input unchanged for shift == 0.
std::vector<double> shifted_profile(const TimeGrid& grid, const std::vector<double>& profile,
                                    double shift);

/// Coefficient 8 pi n2 / (3 lambda_signal a_eff) mapping pump power times
/// length onto differential phase, 1/(W m).
double xpm_coefficient(const FiberSpec& fiber, double signal_wavelength);

}  // namespace kerr
