#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "kerrswitch/config.hpp"
#include "kerrswitch/error.hpp"
#include "kerrswitch/photon_statistics.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {
namespace {

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

void expect_normalised(const JointPhotonDistribution& d) {
  EXPECT_NEAR(d.total(), 1.0, 1e-12);
  for (double p : d.probs()) ASSERT_GE(p, 0.0);
}

TEST(Source, ThermalExamples) {
  const auto vacuum = thermal_joint_source(0.0, 10);
  EXPECT_EQ(vacuum(0, 0), 1.0);
  const auto one = thermal_joint_source(1.0, 60);
  EXPECT_NEAR(one(0, 0), 0.5, 1e-12);
  EXPECT_NEAR(one(3, 3), 1.0 / 16.0, 1e-12);
  EXPECT_EQ(one(2, 3), 0.0);
  const auto bright = thermal_joint_source(3.86, 60);
  EXPECT_NEAR(bright.mean_signal(), 3.86, 1e-3);
  EXPECT_NEAR(bright.mean_idler(), 3.86, 1e-3);
  EXPECT_FALSE(bright.cutoff_too_small());
  expect_normalised(bright);
  EXPECT_TRUE(thermal_joint_source(3.86, 10).cutoff_too_small());
}

TEST(Loss, IdentityAndFullLoss) {
  const auto d = thermal_joint_source(0.7, 30);
  const auto same = apply_loss(d, 1.0, 1.0);
  for (std::size_t k = 0; k < d.probs().size(); ++k) ASSERT_NEAR(same.probs()[k], d.probs()[k], 1e-15);
  const auto dark = apply_loss(d, 1.0, 0.0);
  for (int i = 0; i <= d.cutoff(); ++i) {
    for (int s = 1; s <= d.cutoff(); ++s) ASSERT_EQ(dark(i, s), 0.0);
  }
  expect_normalised(dark);
}

TEST(Loss, InsertionLossOnASinglePair) {
  std::vector<double> probs(4, 0.0);
  probs[3] = 1.0;  // P(1,1)
  const JointPhotonDistribution pair(1, probs);
  const double t = std::pow(10.0, -2.27 / 10.0);
  EXPECT_NEAR(units::db_to_transmittance(2.27), t, 1e-15);
  const auto out = apply_loss(pair, 1.0, t);
  EXPECT_NEAR(out(1, 1), 0.593, 5e-4);
  EXPECT_NEAR(out(1, 0), 0.407, 5e-4);
  EXPECT_NEAR(out(1, 1), t, 1e-15);
  expect_normalised(out);
}

TEST(Loss, ThinningComposes) {
  const auto d = thermal_joint_source(1.3, 40);
  for (auto [t1, t2] : {std::pair{0.3, 0.6}, std::pair{0.9, 0.95}, std::pair{0.593, 0.54}}) {
    const auto twice = apply_loss(apply_loss(d, 1.0, t1), 1.0, t2);
    const auto once = apply_loss(d, 1.0, t1 * t2);
    for (std::size_t k = 0; k < d.probs().size(); ++k) ASSERT_NEAR(twice.probs()[k], once.probs()[k], 1e-12);
    expect_normalised(twice);
  }
}

TEST(Loss, ThinnedMeanScales) {
  const auto d = apply_loss(thermal_joint_source(0.24, 60), 0.8, 0.32);
  EXPECT_NEAR(d.mean_idler(), 0.8 * 0.24, 1e-12);
  EXPECT_NEAR(d.mean_signal(), 0.32 * 0.24, 1e-12);
}

TEST(Split, Examples) {
  const auto one = binomial_split(1, 0.985);
  EXPECT_EQ(one.p(1), 0.985);
  EXPECT_NEAR(one.p(0), 0.015, 1e-15);
  const auto blocked = binomial_split(5, 0.0);
  EXPECT_EQ(blocked.p(0), 1.0);
  const auto half = binomial_split(2, 0.5);
  EXPECT_EQ(half.probs, (std::vector<double>{0.25, 0.5, 0.25}));
}

TEST(Split, NormalisedWithBinomialMean) {
  for (int n = 0; n <= 10; ++n) {
    for (double eta : {0.0, 0.013, 0.37, 0.5, 0.93, 0.985, 1.0}) {
      const auto s = binomial_split(n, eta);
      ASSERT_EQ(s.probs.size(), static_cast<std::size_t>(n + 1));
      EXPECT_NEAR(sum(s.probs), 1.0, 1e-12);
      double mean = 0.0;
      for (int k = 0; k <= n; ++k) {
        ASSERT_GE(s.p(k), 0.0);
        mean += k * s.p(k);
      }
      EXPECT_NEAR(mean, n * eta, 1e-12);
    }
  }
}

TEST(Split, CalibratedPowerBound) {
  for (int n = 1; n <= 6; ++n) EXPECT_GE(binomial_split(n, 0.99).p(n), 0.94);
}

TEST(Split, CurvesNarrowWithPhotonNumber) {
  std::vector<double> delays, etas;
  for (int i = -60; i <= 60; ++i) {
    const double d = i * 0.1e-12;
    delays.push_back(d);
    etas.push_back(0.99 * std::exp(-d * d / (2 * 1e-12 * 1e-12)));
  }
  double previous = 1.0;
  for (int n = 1; n <= 6; ++n) {
    const auto curve = split_vs_delay(etas, n);
    const double w = fwhm_of_switched_probability(delays, curve);
    EXPECT_LT(w, previous);
    previous = w;
    EXPECT_NEAR(curve.front().p(0), 1.0, 1e-6);
  }
}

TEST(Estimators, EtaExp) {
  const auto e = eta_exp({.N_Si = 99, .N_Ui = 1});
  EXPECT_DOUBLE_EQ(e.eta, 0.99);
  EXPECT_NEAR(e.standard_error, std::sqrt(0.99 * 0.01 / 100.0), 1e-15);
  EXPECT_EQ(eta_exp({.N_Si = 0, .N_Ui = 7}).eta, 0.0);
  try {
    eta_exp({});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NoCoincidences);
  }
}

TEST(Estimators, SignalToNoise) {
  // The correctly rounded quotient of the binary operands is one ulp below.
  EXPECT_DOUBLE_EQ(snr(0.32, 1e-5), 32000.0);
  EXPECT_DOUBLE_EQ(snr(0.5, 1e-3), 500.0);
  EXPECT_EQ(snr(0.0, 0.1), 0.0);
  try {
    snr(0.3, 0.0);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ZeroNoise);
  }
}

TEST(Detectors, ModeScalesNoise) {
  DetectorConfig d;
  EXPECT_DOUBLE_EQ(d.effective_noise_S(), 1e-5);
  d.mode = DetectorMode::Tes;
  EXPECT_NEAR(d.effective_noise_S(), 1e-5 * 1e-6 / 60e-12, 1e-12);
  d.noise_enabled = false;
  EXPECT_EQ(d.effective_noise_U(), 0.0);
  EXPECT_NEAR(d.signal_transmittance(), std::pow(10.0, -0.227) * 0.54, 1e-15);
}

}  // namespace
}  // namespace kerr
