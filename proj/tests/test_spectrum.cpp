#include <gtest/gtest.h>

#include <cmath>

#include "kerrswitch/error.hpp"
#include "kerrswitch/propagation.hpp"
#include "kerrswitch/spectrum.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {
namespace {

const TimeGrid kGrid(16384, 40e-12);

TEST(Spectrum, TransformLimitedGaussianBandwidth) {
  const auto p = make_gaussian_pulse(kGrid, 1030e-9, 180e-15, 1e-9, 0.0);
  const double tbp = 2.0 * std::log(2.0) / units::kPi;
  EXPECT_NEAR(spectral_fwhm_hz(p) * 180e-15 / tbp, 1.0, 1e-2);
  EXPECT_NEAR(spectral_fwhm_hz(p) * 180e-15, 0.441, 0.441e-2);
}

TEST(Spectrum, WavelengthDensityHasUnitAreaAndCorrectCentre) {
  const auto p = make_gaussian_pulse(kGrid, 1030e-9, 180e-15, 1e-9, 0.0);
  const auto s = power_spectrum(p);
  double area = 0.0, centroid = 0.0;
  for (std::size_t i = 1; i < s.density.size(); ++i) {
    const double dl = s.wavelength_nm[i] - s.wavelength_nm[i - 1];
    ASSERT_GT(dl, 0.0);
    area += 0.5 * (s.density[i] + s.density[i - 1]) * dl;
    centroid += 0.5 * (s.density[i] * s.wavelength_nm[i] + s.density[i - 1] * s.wavelength_nm[i - 1]) * dl;
  }
  EXPECT_NEAR(area, 1.0, 1e-12);
  EXPECT_NEAR(centroid, 1030.0, 0.5);
  // dlambda = lambda^2 dnu / c for a narrow spectrum.
  const double dnu = spectral_fwhm_hz(p);
  EXPECT_NEAR(spectral_fwhm_nm(s), 1030e-9 * 1030e-9 * dnu / units::kSpeedOfLight / 1e-9, 0.05);
}

TEST(Spectrum, ZeroEnergyIsAnError) {
  try {
    power_spectrum(PulseEnvelope::zeros(kGrid, 1030e-9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroEnergy);
  }
}

TEST(Spectrum, SpmBroadeningAtThreeHalvesPi) {
  FiberSpec f;
  f.beta2_pump = 0.0;
  f.walkoff = 0.0;
  const double gamma = kerr_gamma(f.n2, 1030e-9, f.a_eff);
  // Energy giving a peak SPM phase of 3 pi / 2.
  const double p0 = 1.5 * units::kPi / (gamma * f.length);
  const double e = p0 * 180e-15 * std::sqrt(units::kPi / (4.0 * std::log(2.0)));
  const auto pump = make_gaussian_pulse(kGrid, 1030e-9, 180e-15, e, 0.0);
  const auto signal = make_gaussian_pulse(kGrid, 1550e-9, 700e-15, 1e-19, 0.0);
  const auto r = propagate(pump, signal, f, 0.0, 64);
  EXPECT_GT(spectral_fwhm_nm(pump_spectrum(r.pump_out)), spectral_fwhm_nm(pump_spectrum(pump)));
}

TEST(Spectrum, FwhmIsMonotoneOverAnEnergyLadder) {
  const FiberSpec f;
  const auto signal = make_gaussian_pulse(kGrid, 1550e-9, 700e-15, 1e-19, 0.0);
  double previous = 0.0;
  for (double e = 0.0; e <= 14e-9; e += 1e-9) {
    const auto pump = make_gaussian_pulse(kGrid, 1030e-9, 180e-15, std::max(e, 1e-15), 0.0);
    const auto r = propagate(pump, signal, f, 0.0, 128);
    const double w = spectral_fwhm_nm(pump_spectrum(r.pump_out));
    EXPECT_GE(w, previous) << e;
    previous = w;
  }
}

TEST(Spectrum, FwhmHelperInterpolatesLinearly) {
  const std::vector<double> x{0, 1, 2, 3, 4};
  const std::vector<double> y{0, 1, 2, 1, 0};
  EXPECT_DOUBLE_EQ(full_width_half_max(x, y), 2.0);
  EXPECT_EQ(full_width_half_max({0, 1}, {1, 1}), 0.0);
}

}  // namespace
}  // namespace kerr
