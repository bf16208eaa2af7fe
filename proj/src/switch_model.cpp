#include "kerrswitch/switch_model.hpp"

#include <algorithm>
#include <cmath>

#include "kerrswitch/error.hpp"
#include "kerrswitch/parallel.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

double analytic_efficiency(double theta, double delta_phi) {
  const double a = std::sin(2.0 * theta);
  const double b = std::sin(0.5 * delta_phi);
  return a * a * b * b;
}

double nonlinear_phase(double n2, double l_eff, double intensity, double lambda_signal) {
  return 8.0 * units::kPi * n2 * l_eff * intensity / (3.0 * lambda_signal);
}

double wavepacket_efficiency(double theta, const PulseEnvelope& signal,
                             const std::vector<double>& xpm_phase) {
  const auto samples = signal.samples();
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double w = std::norm(samples[k]);
    const double s = std::sin(0.5 * xpm_phase[k]);
    weighted += w * s * s;
    total += w;
  }
  if (total == 0.0) throw Error(ErrorKind::ZeroEnergy, "signal wavepacket has zero energy");
  const double rotation = std::sin(2.0 * theta);
  return std::clamp(rotation * rotation * (weighted / total), 0.0, 1.0);
}

PulseEnvelope make_pump(const ExperimentConfig& config, double energy) {
  return make_gaussian_pulse(config.grid.grid(), config.pump.center_wavelength,
                             config.pump.fwhm_duration, energy, 0.0);
}

PulseEnvelope make_signal(const ExperimentConfig& config) {
  // One photon's worth of energy; only the shape matters downstream.
  return make_gaussian_pulse(config.grid.grid(), config.signal.center_wavelength,
                             config.signal.fwhm_duration,
                             photon_energy(config.signal.center_wavelength), 0.0);
}

SwitchResult numeric_efficiency(const ExperimentConfig& config, double pump_energy, double delay,
                                bool with_spectrum) {
  const PropagationResult r = propagate(make_pump(config, pump_energy), make_signal(config),
                                        config.fiber, delay, config.propagation.steps);
  SwitchResult out;
  out.eta = wavepacket_efficiency(config.geometry.theta, r.signal_out, r.xpm_phase);
  out.delay = delay;
  out.pump_energy = pump_energy;
  out.xpm_phase = r.xpm_phase;
  if (with_spectrum && pump_energy > 0.0) out.pump_spectrum_out = pump_spectrum(r.pump_out);
  return out;
}

std::vector<double> delay_curve(const ExperimentConfig& config, double pump_energy,
                                const std::vector<double>& delays) {
  const PropagationResult r = propagate(make_pump(config, pump_energy), make_signal(config),
                                        config.fiber, 0.0, config.propagation.steps);
  const TimeGrid& grid = r.signal_out.grid();
  std::vector<double> eta(delays.size());
  for (std::size_t j = 0; j < delays.size(); ++j) {
    eta[j] = wavepacket_efficiency(config.geometry.theta, r.signal_out,
                                   shifted_profile(grid, r.xpm_phase, delays[j]));
  }
  return eta;
}

double calibrate_pi_energy(const ExperimentConfig& config) {
  const double lo = config.calibration.energy_min;
  const double hi = config.calibration.energy_max;
  auto eta_at = [&](double e) { return numeric_efficiency(config, e, 0.0).eta; };

  // Coarse scan for the first local maximum above 0.5.
  constexpr int kScan = 48;
  const double step = (hi - lo) / kScan;
  double prev_e = lo;
  double best_e = lo;
  double best_eta = eta_at(lo);
  bool bracketed = false;
  for (int i = 1; i <= kScan; ++i) {
    const double e = lo + step * i;
    const double v = eta_at(e);
    if (v > best_eta) {
      best_e = e;
      best_eta = v;
    }
    if (best_eta > 0.5 && v < best_eta && best_e == prev_e) {
      bracketed = true;
      break;
    }
    prev_e = e;
  }
  if (!(best_eta > 0.5)) {
    throw Error(ErrorKind::NoBracket, "switching efficiency never exceeds 0.5 between " +
                                          std::to_string(lo) + " J and " + std::to_string(hi) +
                                          " J");
  }
  if (!bracketed) return best_e;

  // Golden-section refinement on [best - step, best + step].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(lo, best_e - step);
  double b = std::min(hi, best_e + step);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eta_at(c);
  double fd = eta_at(d);
  while (b - a > 1e-4 * best_e) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eta_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eta_at(d);
    }
  }
  return 0.5 * (a + b);
}

namespace {

void check_curve(const Curve& curve) {
  if (curve.x.size() != curve.y.size()) {
    throw Error(ErrorKind::InvalidArgument, "curve axes differ in length");
  }
  if (curve.x.size() < 16) {
    throw Error(ErrorKind::InvalidArgument, "curve needs at least 16 samples");
  }
}

double interpolate_crossing(const Curve& c, std::size_t i, std::size_t j, double level) {
  const double frac = (level - c.y[i]) / (c.y[j] - c.y[i]);
  return c.x[i] + frac * (c.x[j] - c.x[i]);
}

}  // namespace

double temporal_resolution(const Curve& curve, double threshold_db) {
  check_curve(curve);
  const double peak = *std::max_element(curve.y.begin(), curve.y.end());
  if (!(peak > 0.0)) throw Error(ErrorKind::InvalidArgument, "curve maximum must be positive");
  const double level = peak * std::pow(10.0, -threshold_db / 10.0);

  std::size_t first = 0;
  while (curve.y[first] < level) ++first;
  std::size_t last = curve.y.size() - 1;
  while (curve.y[last] < level) --last;
  if (first == 0 || last + 1 == curve.y.size()) {
    throw Error(ErrorKind::NoCrossing, "curve does not fall below the threshold on both sides");
  }
  return interpolate_crossing(curve, last + 1, last, level) -
         interpolate_crossing(curve, first - 1, first, level);
}

double flat_top_span(const Curve& curve, double level) {
  check_curve(curve);
  const auto peak_it = std::max_element(curve.y.begin(), curve.y.end());
  if (*peak_it < level) throw Error(ErrorKind::EmptySpan, "curve maximum is below the level");
  const auto peak = static_cast<std::size_t>(peak_it - curve.y.begin());

  std::size_t first = peak;
  while (first > 0 && curve.y[first - 1] >= level) --first;
  std::size_t last = peak;
  while (last + 1 < curve.y.size() && curve.y[last + 1] >= level) ++last;

  const double left = first == 0 ? curve.x.front() : interpolate_crossing(curve, first - 1, first, level);
  const double right =
      last + 1 == curve.y.size() ? curve.x.back() : interpolate_crossing(curve, last + 1, last, level);
  return right - left;
}

SweepSurface sweep_surface(const ExperimentConfig& config, unsigned workers) {
  if (config.sweep.energies.empty() || config.sweep.delays.empty()) {
    throw Error(ErrorKind::InvalidArgument, "sweep axes must be non-empty");
  }
  SweepSurface s{config.sweep.energies, config.sweep.delays, {}};
  s.eta.resize(s.energies.size());
  parallel_for(s.energies.size(), workers,
               [&](std::size_t i) { s.eta[i] = delay_curve(config, s.energies[i], s.delays); });
  return s;
}

}  // namespace kerr
