#include "kerrswitch/commands.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "kerrswitch/csv.hpp"
#include "kerrswitch/error.hpp"
#include "kerrswitch/monte_carlo.hpp"
#include "kerrswitch/parallel.hpp"
#include "kerrswitch/photon_statistics.hpp"
#include "kerrswitch/spectrometer.hpp"
#include "kerrswitch/switch_model.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

using nlohmann::ordered_json;

namespace {

class OutputSet {
 public:
  OutputSet(std::string command, const ExperimentConfig& config, const RunOptions& options)
      : dir_(options.out_dir) {
    manifest_.command = std::move(command);
    manifest_.config_hash = config_hash(config);
    manifest_.started_at = utc_timestamp();
    manifest_.seed = config.rng_seed;
    manifest_.workers = resolve_workers(options.workers);
  }

  void add(const std::string& name, const std::string& text, std::uint64_t rows) {
    const auto path = dir_ / name;
    write_text_file(path, text);
    manifest_.outputs.push_back({name, path, rows, text.size()});
  }

  void add_csv(const std::string& name, const csv::Writer& w) { add(name, w.text(), w.rows()); }

  RunManifest finish() {
    manifest_.finished_at = utc_timestamp();
    write_text_file(dir_ / "manifest.json", manifest_.to_json());
    return manifest_;
  }

 private:
  std::filesystem::path dir_;
  RunManifest manifest_;
};

std::string num(double v) { return csv::number(v); }
double to_nj(double joules) { return joules / units::kNano; }
double to_ps(double seconds) { return seconds / units::kPico; }

// Runs the step-doubling check once at the operating point.
void check_convergence(const ExperimentConfig& config, double pump_energy) {
  (void)propagate_checked(make_pump(config, pump_energy), make_signal(config), config.fiber, 0.0,
                          config.propagation.steps);
}

}  // namespace

RunManifest cmd_sweep(const ExperimentConfig& config, const RunOptions& options) {
  OutputSet out("sweep", config, options);
  const SweepSurface surface = sweep_surface(config, options.workers);

  ordered_json metrics;
  double operating_energy = config.pump.energy;
  try {
    operating_energy = calibrate_pi_energy(config);
    metrics["calibrated_energy_nJ"] = to_nj(operating_energy);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoBracket) throw;
    metrics["calibrated_energy_nJ"] = nullptr;
    metrics["calibration_note"] = e.what();
  }
  check_convergence(config, operating_energy);
  metrics["delay_slice_energy_nJ"] = to_nj(operating_energy);

  const auto& energies = surface.energies;
  const auto& delays = surface.delays;

  std::vector<std::string> header{"delay_ps\\energy_nJ"};
  for (double e : energies) header.push_back(num(to_nj(e)));
  csv::Writer surface_csv(header);
  for (std::size_t j = 0; j < delays.size(); ++j) {
    std::vector<std::string> row{num(to_ps(delays[j]))};
    for (std::size_t i = 0; i < energies.size(); ++i) row.push_back(num(surface.eta[i][j]));
    surface_csv.row(row);
  }
  out.add_csv("surface.csv", surface_csv);

  std::vector<double> energy_slice(energies.size());
  parallel_for(energies.size(), options.workers, [&](std::size_t i) {
    energy_slice[i] = delay_curve(config, energies[i], {0.0}).front();
  });
  csv::Writer energy_csv({"energy_nJ", "eta"});
  for (std::size_t i = 0; i < energies.size(); ++i) {
    energy_csv.row({num(to_nj(energies[i])), num(energy_slice[i])});
  }
  out.add_csv("energy_slice.csv", energy_csv);

  const auto delay_slice = delay_curve(config, operating_energy, delays);
  csv::Writer delay_csv({"delay_ps", "eta"});
  for (std::size_t j = 0; j < delays.size(); ++j) {
    delay_csv.row({num(to_ps(delays[j])), num(delay_slice[j])});
  }
  out.add_csv("delay_slice.csv", delay_csv);

  metrics["eta_max"] = *std::max_element(delay_slice.begin(), delay_slice.end());
  if (delays.size() < 16) {
    metrics["status"] = "insufficient samples";
    metrics["fw10db_ps"] = nullptr;
    metrics["flat98_span_fs"] = nullptr;
  } else {
    metrics["status"] = "ok";
    const Curve curve{delays, delay_slice};
    try {
      metrics["fw10db_ps"] = to_ps(temporal_resolution(curve, 10.0));
    } catch (const Error& e) {
      metrics["fw10db_ps"] = nullptr;
      metrics["fw10db_note"] = e.what();
    }
    try {
      metrics["flat98_span_fs"] = flat_top_span(curve, 0.98) / units::kFemto;
    } catch (const Error& e) {
      metrics["flat98_span_fs"] = nullptr;
      metrics["flat98_note"] = e.what();
    }
  }
  out.add("metrics.json", metrics.dump(2) + "\n", 1);
  return out.finish();
}

RunManifest cmd_fock(const ExperimentConfig& config, int n_max, const RunOptions& options) {
  if (n_max < 1 || n_max > 10) throw Error(ErrorKind::ValidationError, "N_max must lie in 1..10");
  const auto& delays = config.sweep.delays;
  if (delays.empty()) throw Error(ErrorKind::ValidationError, "sweep.delays_ps must be non-empty");
  OutputSet out("fock", config, options);

  check_convergence(config, config.pump.energy);
  const auto etas = delay_curve(config, config.pump.energy, delays);
  auto eta_of_delay = [&](double delay) {
    const auto it = std::find(delays.begin(), delays.end(), delay);
    return etas[static_cast<std::size_t>(it - delays.begin())];
  };
  const MonteCarloResult mc = monte_carlo_experiment(config, eta_of_delay, config.monte_carlo.pulses,
                                                     config.rng_seed, options.workers);

  csv::Writer table({"delay_ps", "N", "n_S", "n_U", "probability", "stderr", "kind"});
  ordered_json doc;
  doc["pump_energy_nJ"] = to_nj(config.pump.energy);
  doc["pulses_per_delay"] = config.monte_carlo.pulses;
  doc["delays_ps"] = ordered_json::array();
  doc["eta"] = etas;
  for (double d : delays) doc["delays_ps"].push_back(to_ps(d));
  doc["curves"] = ordered_json::array();

  for (int n = 1; n <= n_max; ++n) {
    const auto exact = split_vs_delay(etas, n);
    ordered_json curve;
    curve["N"] = n;
    curve["fwhm_P_N0_ps"] = to_ps(fwhm_of_switched_probability(delays, exact));
    curve["exact"] = ordered_json::array();
    curve["monte_carlo"] = ordered_json::array();
    for (std::size_t j = 0; j < delays.size(); ++j) {
      const SplitDistribution emp = mc.per_delay[j].empirical_split(n);
      for (int s = 0; s <= n; ++s) {
        table.row({num(to_ps(delays[j])), std::to_string(n), std::to_string(s),
                   std::to_string(n - s), num(exact[j].p(s)), "0", "exact"});
      }
      for (int s = 0; s <= n; ++s) {
        table.row({num(to_ps(delays[j])), std::to_string(n), std::to_string(s),
                   std::to_string(n - s), num(emp.p(s)),
                   num(emp.standard_error[static_cast<std::size_t>(s)]), "monte_carlo"});
      }
      curve["exact"].push_back(exact[j].probs);
      curve["monte_carlo"].push_back({{"events", mc.per_delay[j].postselected_events(n)},
                                      {"probability", emp.probs},
                                      {"stderr", emp.standard_error}});
    }
    doc["curves"].push_back(std::move(curve));
  }

  doc["counts"] = ordered_json::array();
  for (const auto& o : mc.per_delay) {
    ordered_json c{{"delay_ps", to_ps(o.delay)},
                   {"N_Si", o.counts.N_Si},
                   {"N_Ui", o.counts.N_Ui},
                   {"pulses", o.counts.pulses},
                   {"noise_S", o.counts.noise_S},
                   {"noise_U", o.counts.noise_U}};
    if (o.counts.N_Si + o.counts.N_Ui > 0) {
      const EtaEstimate est = eta_exp(o.counts);
      c["eta_exp"] = est.eta;
      c["eta_exp_stderr"] = est.standard_error;
    } else {
      c["eta_exp"] = nullptr;
    }
    doc["counts"].push_back(std::move(c));
  }

  out.add_csv("fock_probs.csv", table);
  out.add("fock_probs.json", doc.dump(2) + "\n", static_cast<std::uint64_t>(n_max));
  return out.finish();
}

RunManifest cmd_spectrum(const ExperimentConfig& config, const RunOptions& options) {
  OutputSet out("spectrum", config, options);
  const auto& energies = config.sweep.energies;
  check_convergence(config, config.pump.energy);

  std::vector<Spectrum> spectra(energies.size());
  parallel_for(energies.size(), options.workers, [&](std::size_t i) {
    if (energies[i] == 0.0) {
      // Unit-area spectra are energy independent in the linear limit.
      spectra[i] = pump_spectrum(make_pump(config, config.pump.energy));
      return;
    }
    const auto r = propagate(make_pump(config, energies[i]), make_signal(config), config.fiber, 0.0,
                             config.propagation.steps);
    spectra[i] = pump_spectrum(r.pump_out);
  });

  csv::Writer spectra_csv({"energy_nJ", "wavelength_nm", "density"});
  csv::Writer widths_csv({"energy_nJ", "fwhm_nm", "fwhm_THz"});
  for (std::size_t i = 0; i < energies.size(); ++i) {
    const Spectrum& s = spectra[i];
    const double peak = *std::max_element(s.density.begin(), s.density.end());
    for (std::size_t k = 0; k < s.density.size(); ++k) {
      if (s.density[k] < 1e-6 * peak) continue;
      spectra_csv.row({num(to_nj(energies[i])), num(s.wavelength_nm[k]), num(s.density[k])});
    }
    const double fwhm_nm = spectral_fwhm_nm(s);
    // Convert about the pump centre: dnu = c dlambda / lambda^2.
    const double lambda = config.pump.center_wavelength;
    const double fwhm_thz = units::kSpeedOfLight * fwhm_nm * units::kNano / (lambda * lambda) / 1e12;
    widths_csv.row({num(to_nj(energies[i])), num(fwhm_nm), num(fwhm_thz)});
  }
  out.add_csv("pump_spectra.csv", spectra_csv);
  out.add_csv("pump_spectral_widths.csv", widths_csv);

  const TofSpec tof{config.spectrometer.dispersion, config.signal.center_wavelength,
                    config.spectrometer.jitter_fwhm};
  const auto signal = make_signal(config);
  const auto on = propagate(make_pump(config, config.pump.energy), signal, config.fiber, 0.0,
                            config.propagation.steps);
  const auto off = propagate(make_pump(config, 0.0), signal, config.fiber, 0.0,
                             config.propagation.steps);
  const auto hist_on = spectrum_to_histogram(tof, power_spectrum(on.signal_out),
                                             config.spectrometer.bin_width);
  const auto hist_off = spectrum_to_histogram(tof, power_spectrum(off.signal_out),
                                              config.spectrometer.bin_width);
  csv::Writer tof_csv({"state", "time_ps", "density"});
  for (const auto& [label, h] : {std::pair{"unswitched", &hist_off}, std::pair{"switched", &hist_on}}) {
    for (std::size_t b = 0; b < h->time.size(); ++b) {
      tof_csv.row({label, num(to_ps(h->time[b])), num(h->density[b] * units::kPico)});
    }
  }
  out.add_csv("signal_tof.csv", tof_csv);

  // Diagnostic: the component a polarizer would actually pass,
  // psi (exp(i dphi) - 1) / 2i, which carries the XPM chirp.
  std::vector<Complex> passed(on.signal_out.samples().begin(), on.signal_out.samples().end());
  for (std::size_t k = 0; k < passed.size(); ++k) {
    passed[k] *= (std::polar(1.0, on.xpm_phase[k]) - 1.0) / Complex(0.0, 2.0);
  }
  const auto hist_passed = spectrum_to_histogram(
      tof, power_spectrum(PulseEnvelope(signal.grid(), signal.center_wavelength(), std::move(passed))),
      config.spectrometer.bin_width);

  ordered_json summary{{"tof_total_variation", total_variation(hist_on, hist_off)},
                       {"passed_component_total_variation", total_variation(hist_passed, hist_off)},
                       {"switch_eta_at_zero_delay",
                        wavepacket_efficiency(config.geometry.theta, on.signal_out, on.xpm_phase)}};
  out.add("spectrum_summary.json", summary.dump(2) + "\n", 1);
  return out.finish();
}

RunManifest cmd_calibrate(const ExperimentConfig& config, const RunOptions& options) {
  OutputSet out("calibrate", config, options);
  const double e_star = calibrate_pi_energy(config);
  check_convergence(config, e_star);
  const double eta = numeric_efficiency(config, e_star, 0.0).eta;
  ordered_json doc{{"calibrated_energy_nJ", to_nj(e_star)}, {"eta_at_zero_delay", eta}};
  out.add("calibration.json", doc.dump(2) + "\n", 1);
  return out.finish();
}

}  // namespace kerr
