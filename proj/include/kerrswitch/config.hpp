#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kerrswitch/fiber.hpp"
#include "kerrswitch/time_grid.hpp"

namespace kerr {

struct PumpConfig {
  double center_wavelength = 1030e-9;  // m
  double fwhm_duration = 180e-15;      // s
  double energy = 8e-9;                // J
  double repetition_rate = 200e3;      // Hz
  friend bool operator==(const PumpConfig&, const PumpConfig&) = default;
};

struct SignalConfig {
  double center_wavelength = 1550e-9;
  double fwhm_duration = 700e-15;
  friend bool operator==(const SignalConfig&, const SignalConfig&) = default;
};

struct GridConfig {
  std::size_t n_samples = 16384;
  double window = 40e-12;
  TimeGrid grid() const { return TimeGrid(n_samples, window); }
  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

struct SourceConfig {
  double mean_photon_number = 0.24;
  int max_photon_cutoff = 60;
  friend bool operator==(const SourceConfig&, const SourceConfig&) = default;
};

enum class DetectorMode { Snspd, Tes };

struct DetectorConfig {
  DetectorMode mode = DetectorMode::Snspd;
  double herald_efficiency = 0.8;
  double insertion_loss_db = 2.27;       // pre-switch signal loss
  double system_transmittance = 0.54;    // arm-independent detection efficiency
  double noise_counts_per_pulse_S = 1e-5;
  double noise_counts_per_pulse_U = 1e-5;
  bool noise_enabled = true;
  double tes_noise_multiplier = 1e-6 / 60e-12;
  double coincidence_window = 60e-12;    // s

  /// Signal survival probability from source to detector, herald excluded.
  double signal_transmittance() const;
  /// Per-pulse noise rates after mode scaling and the on/off switch.
  double effective_noise_S() const;
  double effective_noise_U() const;

  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

struct SweepConfig {
  std::vector<double> energies;  // J
  std::vector<double> delays;    // s
  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct PropagationConfig {
  int steps = 256;
  friend bool operator==(const PropagationConfig&, const PropagationConfig&) = default;
};

struct CalibrationConfig {
  double energy_min = 0.5e-9;
  double energy_max = 30e-9;
  friend bool operator==(const CalibrationConfig&, const CalibrationConfig&) = default;
};

struct MonteCarloConfig {
  std::int64_t pulses = 200000;  // per delay
  friend bool operator==(const MonteCarloConfig&, const MonteCarloConfig&) = default;
};

struct SpectrometerConfig {
  double dispersion = 1.033;  // s/m (1033 ps/nm)
  double jitter_fwhm = 20e-12;
  double bin_width = 10e-12;
  friend bool operator==(const SpectrometerConfig&, const SpectrometerConfig&) = default;
};

/// Complete description of one simulated experiment. SI units.
struct ExperimentConfig {
  PumpConfig pump;
  SignalConfig signal;
  FiberSpec fiber;
  PolarizationGeometry geometry;
  GridConfig grid;
  SourceConfig source;
  DetectorConfig detectors;
  SweepConfig sweep = default_sweep();
  PropagationConfig propagation;
  CalibrationConfig calibration;
  MonteCarloConfig monte_carlo;
  SpectrometerConfig spectrometer;
  std::uint64_t rng_seed = 20250101;

  /// Energies 0-14 nJ in 29 steps, delays -6..+6 ps in 121 steps.
  static SweepConfig default_sweep();

  /// Throws Error{ValidationError} naming the first violated invariant.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct ParseOptions {
  bool strict = false;  // reject unknown keys instead of warning
};

struct ParsedConfig {
  ExperimentConfig config;
  std::vector<std::string> warnings;
};

/// Parses a JSON document (empty text means all defaults), fills defaults,
/// validates. Throws Error{ParseError} with line/column or key path, or
/// Error{ValidationError}.
ParsedConfig parse_config(std::string_view text, const ParseOptions& options = {});

/// Canonical JSON document; parse_config(emit_config(c)).config == c.
std::string emit_config(const ExperimentConfig& config);

/// FNV-1a over the canonical document.
std::uint64_t config_hash(const ExperimentConfig& config);

}  // namespace kerr
