#include "kerrswitch/fiber.hpp"

#include <cmath>

#include "kerrswitch/error.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

double FiberSpec::effective_length() const {
  if (alpha <= 0.0) return length;
  return -std::expm1(-alpha * length) / alpha;
}

void FiberSpec::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorKind::ValidationError, what); };
  if (!(length > 0.0) || !std::isfinite(length)) fail("fiber.length must be positive");
  if (!(a_eff > 0.0) || !std::isfinite(a_eff)) fail("fiber.a_eff must be positive");
  if (!(n2 >= 0.0) || !std::isfinite(n2)) fail("fiber.n2 must be non-negative");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) fail("fiber.alpha must be non-negative");
  if (!std::isfinite(beta2_pump) || !std::isfinite(beta3_pump) || !std::isfinite(beta2_signal) ||
      !std::isfinite(walkoff)) {
    fail("fiber dispersion coefficients must be finite");
  }
}

void PolarizationGeometry::validate() const {
  if (!(theta >= 0.0 && theta <= units::kPi / 2.0)) {
    throw Error(ErrorKind::ValidationError, "geometry.theta must lie in [0, pi/2]");
  }
}

double kerr_gamma(double n2, double wavelength, double a_eff) {
  return 2.0 * units::kPi * n2 / (wavelength * a_eff);
}

}  // namespace kerr
