#pragma once

// Physical constants and unit scale factors. Everything inside the library is
// SI; the scale factors convert to and from the units used in config files
// and CSV output.

#include <cmath>
#include <numbers>

namespace kerr::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;   // m/s
inline constexpr double kPlanck = 6.62607015e-34;      // J s

inline constexpr double kNano = 1e-9;
inline constexpr double kPico = 1e-12;
inline constexpr double kFemto = 1e-15;
inline constexpr double kMicro = 1e-6;

// Dispersion coefficients: 1 fs^2/mm = 1e-27 s^2/m, 1 fs^3/mm = 1e-42 s^3/m.
inline constexpr double kFs2PerMm = 1e-27;
inline constexpr double kFs3PerMm = 1e-42;

// Time-of-flight dispersion: 1 ps/nm = 1e-3 s/m.
inline constexpr double kPsPerNm = 1e-3;

inline double db_to_transmittance(double loss_db) { return std::pow(10.0, -loss_db / 10.0); }

}  // namespace kerr::units
