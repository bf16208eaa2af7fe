#pragma once

#include <optional>
#include <vector>

#include "kerrswitch/config.hpp"
#include "kerrswitch/propagation.hpp"
#include "kerrswitch/spectrum.hpp"

namespace kerr {

/// sin^2(2 theta) sin^2(delta_phi / 2).
double analytic_efficiency(double theta, double delta_phi);

/// 8 pi n2 L_eff I / (3 lambda_signal).
double nonlinear_phase(double n2, double l_eff, double intensity, double lambda_signal);

struct SwitchResult {
  double eta = 0.0;
  double delay = 0.0;        // s
  double pump_energy = 0.0;  // J
  std::vector<double> xpm_phase;
  std::optional<Spectrum> pump_spectrum_out;
};

/// Switching efficiency of a wavepacket under a time-dependent phase: the
/// |psi|^2-weighted average of the pointwise two-level formula.
double wavepacket_efficiency(double theta, const PulseEnvelope& signal,
                             const std::vector<double>& xpm_phase);

/// Pump and signal envelopes the config describes, pump at the given energy.
PulseEnvelope make_pump(const ExperimentConfig& config, double energy);
PulseEnvelope make_signal(const ExperimentConfig& config);

/// Propagates at the config's operating point and evaluates the efficiency at
/// `delay`.
SwitchResult numeric_efficiency(const ExperimentConfig& config, double pump_energy, double delay,
                                bool with_spectrum = false);

/// Efficiency against delay for one pump energy. One propagation serves every
/// delay; each entry equals numeric_efficiency(config, pump_energy, delay).eta.
std::vector<double> delay_curve(const ExperimentConfig& config, double pump_energy,
                                const std::vector<double>& delays);

/// Pump energy in [calibration.energy_min, calibration.energy_max] maximising
/// eta at zero delay (first maximum). Throws NoBracket if eta never reaches 0.5.
double calibrate_pi_energy(const ExperimentConfig& config);

/// A sampled response curve; x ascending.
struct Curve {
  std::vector<double> x;
  std::vector<double> y;
};

/// Width between the outermost crossings of y_max * 10^(-threshold_db / 10),
/// linear in y. Throws NoCrossing if either side never falls below the level,
/// InvalidArgument for fewer than 16 samples or a non-positive maximum.
double temporal_resolution(const Curve& curve, double threshold_db = 10.0);

/// Width of the contiguous region around the maximum where y >= level.
/// Throws EmptySpan if the maximum is below the level.
double flat_top_span(const Curve& curve, double level);

struct SweepSurface {
  std::vector<double> energies;  // J
  std::vector<double> delays;    // s
  std::vector<std::vector<double>> eta;  // [energy][delay]
};

/// eta over the config's sweep grid; `workers` caps the thread count (0 means
/// hardware concurrency). Results do not depend on the worker count.
SweepSurface sweep_surface(const ExperimentConfig& config, unsigned workers = 0);

}  // namespace kerr
