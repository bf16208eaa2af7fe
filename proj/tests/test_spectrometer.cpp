#include <gtest/gtest.h>

#include <cmath>

#include "kerrswitch/error.hpp"
#include "kerrswitch/spectrometer.hpp"

namespace kerr {
namespace {

constexpr double kD = 1033e-3;  // 1033 ps/nm in s/m
constexpr double kRef = 1550e-9;

Spectrum gaussian_spectrum(double centre_nm, double sigma_nm, int n = 4001) {
  Spectrum s;
  for (int i = 0; i < n; ++i) {
    const double l = centre_nm + 10.0 * sigma_nm * (2.0 * i / (n - 1) - 1.0);
    s.wavelength_nm.push_back(l);
    s.density.push_back(std::exp(-0.5 * std::pow((l - centre_nm) / sigma_nm, 2)) /
                        (sigma_nm * std::sqrt(2.0 * M_PI)));
  }
  return s;
}

double mass(const TofHistogram& h) {
  double m = 0.0;
  for (double d : h.density) m += d * h.bin_width;
  return m;
}

TEST(Tof, LinearMapping) {
  const TofSpec spec{kD, kRef, 0.0};
  EXPECT_EQ(arrival_time(spec, kRef), 0.0);
  EXPECT_NEAR(arrival_time(spec, kRef + 1e-9), 1033e-12, 1e-21);
  EXPECT_NEAR(arrival_time(spec, kRef + 0.5e-9), 516.5e-12, 1e-21);
}

TEST(Tof, MappingIsMonotone) {
  const TofSpec pos{kD, kRef, 0.0};
  const TofSpec neg{-kD, kRef, 0.0};
  double last_pos = -1.0, last_neg = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double l = kRef - 5e-9 + i * 0.1e-9;
    EXPECT_GT(arrival_time(pos, l), last_pos);
    EXPECT_LT(arrival_time(neg, l), last_neg);
    last_pos = arrival_time(pos, l);
    last_neg = arrival_time(neg, l);
  }
}

TEST(Tof, NarrowLinePeaksAtOneNanometreOffset) {
  const TofSpec spec{kD, kRef, 0.0};
  const Spectrum line{{1550.99, 1551.0, 1551.01}, {0.0, 100.0, 0.0}};
  const auto h = spectrum_to_histogram(spec, line, 1e-12);
  const auto peak = std::max_element(h.density.begin(), h.density.end()) - h.density.begin();
  EXPECT_NEAR(h.time[static_cast<std::size_t>(peak)], 1033e-12, 1e-15);
  EXPECT_NEAR(mass(h), 1.0, 1e-9);
}

TEST(Tof, GaussianWidthAddsInQuadrature) {
  for (double jitter : {0.0, 20e-12, 60e-12}) {
    const TofSpec spec{kD, kRef, jitter};
    const double sigma_nm = 0.05;
    const auto h = spectrum_to_histogram(spec, gaussian_spectrum(1550.2, sigma_nm), 1e-12);
    double m = 0.0, mu = 0.0, var = 0.0;
    for (std::size_t i = 0; i < h.time.size(); ++i) {
      m += h.density[i] * h.bin_width;
      mu += h.density[i] * h.bin_width * h.time[i];
    }
    mu /= m;
    for (std::size_t i = 0; i < h.time.size(); ++i) {
      var += h.density[i] * h.bin_width * std::pow(h.time[i] - mu, 2);
    }
    const double sigma_j = jitter / (2.0 * std::sqrt(2.0 * std::log(2.0)));
    const double expected = std::hypot(kD * sigma_nm * 1e-9, sigma_j);
    EXPECT_NEAR(std::sqrt(var / m) / expected, 1.0, 1e-2) << jitter;
    EXPECT_NEAR(mu, kD * 0.2e-9, 1e-12);
    EXPECT_NEAR(m, 1.0, 1e-9);
  }
}

TEST(Tof, NarrowSupportIsDegenerate) {
  const TofSpec spec{kD, kRef, 20e-12};
  const Spectrum line{{1550.99, 1551.0, 1551.01}, {0.0, 100.0, 0.0}};
  try {
    spectrum_to_histogram(spec, line, 10e-12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateBins);
  }
}

TEST(Tof, InvalidSpecs) {
  EXPECT_THROW((TofSpec{0.0, kRef, 0.0}.validate()), Error);
  EXPECT_THROW((TofSpec{kD, kRef, -1e-12}.validate()), Error);
}

TEST(Tof, TotalVariation) {
  const TofSpec spec{kD, kRef, 20e-12};
  const auto a = spectrum_to_histogram(spec, gaussian_spectrum(1550.0, 0.1), 10e-12);
  EXPECT_EQ(total_variation(a, a), 0.0);
  const auto far = spectrum_to_histogram(spec, gaussian_spectrum(1560.0, 0.1), 10e-12);
  EXPECT_NEAR(total_variation(a, far), 1.0, 1e-9);
}

}  // namespace
}  // namespace kerr
