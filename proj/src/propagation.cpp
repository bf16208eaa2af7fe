#include "kerrswitch/propagation.hpp"

#include <algorithm>
#include <cmath>

#include "kerrswitch/error.hpp"
#include "kerrswitch/fft.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

double xpm_coefficient(const FiberSpec& fiber, double signal_wavelength) {
  return 8.0 * units::kPi * fiber.n2 / (3.0 * signal_wavelength * fiber.a_eff);
}

namespace {

// exp(h * [i (b2/2 w^2 + b3/6 w^3 + walkoff w) - alpha/2]) for every bin.
std::vector<Complex> linear_operator(const TimeGrid& grid, double beta2, double beta3,
                                     double walkoff, double alpha, double h) {
  std::vector<Complex> op(grid.size());
  const double attenuation = std::exp(-0.5 * alpha * h);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double w = grid.omega(k);
    const double phase = (0.5 * beta2 * w * w + beta3 * w * w * w / 6.0 + walkoff * w) * h;
    op[k] = std::polar(attenuation, phase);
  }
  return op;
}

void multiply(std::span<Complex> data, const std::vector<Complex>& op) {
  for (std::size_t k = 0; k < data.size(); ++k) data[k] *= op[k];
}

// Pump evolution for a centred collision (delay 0). Everything delay-dependent
// is a pure translation of this result.
PropagationResult collide(const PulseEnvelope& pump, const PulseEnvelope& signal,
                          const FiberSpec& fiber, int steps) {
  const TimeGrid& grid = pump.grid();
  const double dz = fiber.length / steps;
  const double gamma_pump = kerr_gamma(fiber.n2, pump.center_wavelength(), fiber.a_eff);
  const double xpm = xpm_coefficient(fiber, signal.center_wavelength());

  PropagationResult result{.pump_in = shifted(pump, -0.5 * fiber.walkoff * fiber.length),
                           .pump_out = pump,
                           .signal_out = signal,
                           .xpm_phase = std::vector<double>(grid.size(), 0.0),
                           .steps_taken = steps,
                           .per_step_energy = {},
                           .delay = 0.0};
  result.per_step_energy.reserve(static_cast<std::size_t>(steps));

  const auto half = linear_operator(grid, fiber.beta2_pump, fiber.beta3_pump, fiber.walkoff,
                                    fiber.alpha, 0.5 * dz);
  const auto full = linear_operator(grid, fiber.beta2_pump, fiber.beta3_pump, fiber.walkoff,
                                    fiber.alpha, dz);

  Fft fft(grid.size());
  auto a = fft.buffer();
  std::copy(result.pump_in.samples().begin(), result.pump_in.samples().end(), a.begin());

  // Symmetric splitting with the adjacent half linear steps fused:
  // L/2 N L N L ... N L/2.
  fft.to_spectrum();
  multiply(a, half);
  fft.to_time();
  const double dt = grid.dt();
  for (int step = 0; step < steps; ++step) {
    double e = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double p = std::norm(a[k]);
      e += p;
      result.xpm_phase[k] += xpm * p * dz;
      if (gamma_pump != 0.0) a[k] *= std::polar(1.0, gamma_pump * p * dz);
    }
    result.per_step_energy.push_back(e * dt);
    fft.to_spectrum();
    multiply(a, step + 1 < steps ? full : half);
    fft.to_time();
  }
  result.pump_out = PulseEnvelope(grid, pump.center_wavelength(),
                                  std::vector<Complex>(a.begin(), a.end()));

  // The weak signal evolves linearly, so one exact step covers the fiber.
  const auto signal_op = linear_operator(grid, fiber.beta2_signal, 0.0, 0.0, fiber.alpha,
                                         fiber.length);
  std::copy(signal.samples().begin(), signal.samples().end(), a.begin());
  fft.to_spectrum();
  multiply(a, signal_op);
  fft.to_time();
  result.signal_out = PulseEnvelope(grid, signal.center_wavelength(),
                                    std::vector<Complex>(a.begin(), a.end()));
  return result;
}

}  // namespace

std::vector<double> shifted_profile(const TimeGrid& grid, const std::vector<double>& profile,
                                    double shift) {
  if (shift == 0.0) return profile;
  Fft fft(grid.size());
  auto buf = fft.buffer();
  std::copy(profile.begin(), profile.end(), buf.begin());
  fft.to_spectrum();
  for (std::size_t k = 0; k < grid.size(); ++k) buf[k] *= std::polar(1.0, grid.omega(k) * shift);
  // The Nyquist bin has no conjugate partner; drop it to keep the result real.
  buf[grid.size() / 2] = 0.0;
  fft.to_time();
  std::vector<double> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) out[k] = buf[k].real();
  return out;
}

PropagationResult propagate(const PulseEnvelope& pump, const PulseEnvelope& signal,
                            const FiberSpec& fiber, double delay, int steps) {
  if (!(pump.grid() == signal.grid())) {
    throw Error(ErrorKind::GridMismatch, "pump and signal must share a time grid");
  }
  if (steps < 8) throw Error(ErrorKind::InvalidArgument, "propagation needs at least 8 steps");
  fiber.validate();

  PropagationResult r = collide(pump, signal, fiber, steps);
  if (delay != 0.0) {
    r.pump_in = shifted(r.pump_in, delay);
    r.pump_out = shifted(r.pump_out, delay);
    r.xpm_phase = shifted_profile(pump.grid(), r.xpm_phase, delay);
  }
  r.delay = delay;
  return r;
}

double max_phase_residual(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

PropagationResult propagate_checked(const PulseEnvelope& pump, const PulseEnvelope& signal,
                                    const FiberSpec& fiber, double delay, int steps,
                                    double tolerance) {
  const PropagationResult coarse = propagate(pump, signal, fiber, delay, steps);
  PropagationResult fine = propagate(pump, signal, fiber, delay, 2 * steps);
  const double residual = max_phase_residual(coarse.xpm_phase, fine.xpm_phase);
  if (!(residual <= tolerance)) {
    throw Error(ErrorKind::NonConvergence,
                "step-doubling residual " + std::to_string(residual) + " rad exceeds " +
                    std::to_string(tolerance) + " rad at " + std::to_string(steps) + " steps");
  }
  return fine;
}

}  // namespace kerr
