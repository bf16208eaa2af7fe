#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kerrswitch/error.hpp"
#include "kerrswitch/fiber.hpp"
#include "kerrswitch/pulse.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {
namespace {

const TimeGrid kGrid(16384, 40e-12);

TEST(TimeGrid, RejectsNonPowerOfTwoAndTinyGrids) {
  EXPECT_THROW(TimeGrid(1000, 1e-12), Error);
  EXPECT_THROW(TimeGrid(32, 1e-12), Error);
  EXPECT_THROW(TimeGrid(64, 0.0), Error);
  EXPECT_NO_THROW(TimeGrid(64, 1e-12));
}

TEST(TimeGrid, CentredTimesAndFrequencySpacing) {
  const TimeGrid g(256, 10e-12);
  EXPECT_DOUBLE_EQ(g.time(128), 0.0);
  EXPECT_DOUBLE_EQ(g.time(0), -5e-12);
  EXPECT_DOUBLE_EQ(g.omega(1), 2.0 * units::kPi / 10e-12);
  EXPECT_DOUBLE_EQ(g.omega(255), -2.0 * units::kPi / 10e-12);
  EXPECT_LT(g.omega(128), 0.0);
}

TEST(Pulse, ZeroEnergyGivesZeroSamples) {
  const auto p = make_gaussian_pulse(kGrid, 1030e-9, 180e-15, 0.0, 0.0);
  for (const auto& a : p.samples()) EXPECT_EQ(a, Complex(0.0, 0.0));
  EXPECT_EQ(energy(p), 0.0);
}

TEST(Pulse, PumpPulseCarriesRequestedEnergyAndIsSymmetric) {
  const auto p = make_gaussian_pulse(kGrid, 1030e-9, 180e-15, 8e-9, 0.0);
  EXPECT_NEAR(energy(p), 8e-9, 8e-9 * 1e-12);
  const auto s = p.samples();
  const std::size_t mid = kGrid.size() / 2;
  for (std::size_t k = 1; k < mid; ++k) {
    ASSERT_DOUBLE_EQ(std::norm(s[mid - k]), std::norm(s[mid + k]));
  }
}

TEST(Pulse, NumericPeakMatchesClosedFormPeakPower) {
  const auto p = make_gaussian_pulse(kGrid, 1030e-9, 1e-12, 1e-9, 0.0);
  double peak = 0.0;
  for (const auto& a : p.samples()) peak = std::max(peak, std::norm(a));
  const double closed = 1e-9 / (1e-12 * std::sqrt(units::kPi / (4.0 * std::log(2.0))));
  EXPECT_NEAR(peak / closed, 1.0, 1e-9);
  EXPECT_NEAR(gaussian_peak_power(1e-12, 1e-9) / closed, 1.0, 1e-15);
}

TEST(Pulse, ErrorsForOversizedOrNegativePulses) {
  try {
    make_gaussian_pulse(kGrid, 1030e-9, 10e-12, 1e-9, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GridTooSmall);
  }
  try {
    make_gaussian_pulse(kGrid, 1030e-9, 1e-12, -1e-9, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeEnergy);
  }
}

TEST(Pulse, EnergyIsAdditiveForDisjointPulses) {
  const auto a = make_gaussian_pulse(kGrid, 1030e-9, 200e-15, 3e-9, -8e-12);
  const auto b = make_gaussian_pulse(kGrid, 1030e-9, 300e-15, 5e-9, 8e-12);
  std::vector<Complex> sum(kGrid.size());
  double direct = 0.0;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    sum[k] = a.samples()[k] + b.samples()[k];
    direct += std::norm(a.samples()[k]) + std::norm(b.samples()[k]);
  }
  const PulseEnvelope both(kGrid, 1030e-9, std::move(sum));
  EXPECT_NEAR(energy(both) / (direct * kGrid.dt()), 1.0, 1e-12);
  EXPECT_NEAR(energy(both) / 8e-9, 1.0, 1e-12);
}

TEST(Pulse, ParsevalHoldsForRandomEnvelopes) {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal(0.0, 1.0);
  const TimeGrid g(1024, 5e-12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> s(g.size());
    for (auto& a : s) a = {normal(gen), normal(gen)};
    const PulseEnvelope p(g, 1550e-9, std::move(s));
    EXPECT_NEAR(energy_from_spectrum(p) / energy(p), 1.0, 1e-10);
  }
}

double temporal_fwhm_of(const PulseEnvelope& p) {
  const auto pw = p.power();
  const double half = 0.5 * p.peak_power();
  std::size_t lo = 0;
  while (pw[lo + 1] < half) ++lo;
  std::size_t hi = pw.size() - 1;
  while (pw[hi - 1] < half) --hi;
  const TimeGrid& g = p.grid();
  const double t_lo = g.time(lo) + g.dt() * (half - pw[lo]) / (pw[lo + 1] - pw[lo]);
  const double t_hi = g.time(hi) - g.dt() * (half - pw[hi]) / (pw[hi - 1] - pw[hi]);
  return t_hi - t_lo;
}

TEST(Pulse, SuperGaussianHasRequestedWidthAndEnergy) {
  const auto p = make_super_gaussian_pulse(kGrid, 1030e-9, 8e-12, 5, 2e-9, 0.0);
  EXPECT_NEAR(energy(p), 2e-9, 2e-21);
  // Flat top: (t / T0)^10 stays below 1e-6 across the central 2 ps.
  const double peak = p.peak_power();
  for (std::size_t k = 0; k < kGrid.size(); ++k) {
    if (std::abs(kGrid.time(k)) < 1e-12) ASSERT_NEAR(std::norm(p.samples()[k]) / peak, 1.0, 1e-6);
  }
  EXPECT_NEAR(temporal_fwhm_of(p) / 8e-12, 1.0, 1e-3);
}

TEST(Pulse, ShiftMovesCentroid) {
  const auto p = make_gaussian_pulse(kGrid, 1030e-9, 300e-15, 1e-9, 0.0);
  const auto q = shifted(p, 1.2345e-12);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < kGrid.size(); ++k) {
    num += kGrid.time(k) * std::norm(q.samples()[k]);
    den += std::norm(q.samples()[k]);
  }
  EXPECT_NEAR(num / den, 1.2345e-12, 1e-18);
  EXPECT_NEAR(energy(q) / energy(p), 1.0, 1e-12);
}

TEST(Fiber, EffectiveLengthLimits) {
  FiberSpec f;
  f.alpha = 0.0;
  EXPECT_EQ(f.effective_length(), f.length);
  f.alpha = 1e-9;
  EXPECT_LT(std::abs(f.effective_length() - f.length), 1e-6 * f.length);
  EXPECT_LE(f.effective_length(), f.length);
  f.alpha = 2.0;
  EXPECT_NEAR(f.effective_length(), (1.0 - std::exp(-2.0 * f.length)) / 2.0, 1e-15);
  EXPECT_LT(f.effective_length(), f.length);
}

TEST(Fiber, ValidationRejectsUnphysicalValues) {
  FiberSpec f;
  f.a_eff = 0.0;
  EXPECT_THROW(f.validate(), Error);
  f = FiberSpec{};
  f.n2 = -1e-20;
  EXPECT_THROW(f.validate(), Error);
  PolarizationGeometry g{2.0};
  EXPECT_THROW(g.validate(), Error);
}

}  // namespace
}  // namespace kerr
