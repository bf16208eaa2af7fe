#pragma once

#include <filesystem>
#include <string>

#include "kerrswitch/config.hpp"
#include "kerrswitch/manifest.hpp"

namespace kerr {

struct RunOptions {
  std::filesystem::path out_dir = ".";
  unsigned workers = 0;
};

/// Switching surface over the sweep grid, the delay-0 energy slice, the
/// delay slice at the calibrated energy and the temporal metrics.
/// Writes surface.csv, energy_slice.csv, delay_slice.csv, metrics.json,
/// manifest.json.
RunManifest cmd_sweep(const ExperimentConfig& config, const RunOptions& options);

/// Exact and Monte Carlo P_{n_S,n_U}(delay) for N = 1..n_max at the config's
/// pump energy. Writes fock_probs.csv, fock_probs.json, manifest.json.
RunManifest cmd_fock(const ExperimentConfig& config, int n_max, const RunOptions& options);

/// Pump output spectra over the sweep energies and switched/unswitched signal
/// time-of-flight histograms. Writes pump_spectra.csv, pump_spectral_widths.csv,
/// signal_tof.csv, manifest.json.
RunManifest cmd_spectrum(const ExperimentConfig& config, const RunOptions& options);

/// Calibrated pi-phase energy. Writes calibration.json, manifest.json.
RunManifest cmd_calibrate(const ExperimentConfig& config, const RunOptions& options);

}  // namespace kerr
