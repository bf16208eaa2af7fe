#include "kerrswitch/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "json.hpp"
#include "kerrswitch/error.hpp"
#include "kerrswitch/units.hpp"

namespace kerr {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Detector helpers

double DetectorConfig::signal_transmittance() const {
  return units::db_to_transmittance(insertion_loss_db) * system_transmittance;
}

double DetectorConfig::effective_noise_S() const {
  if (!noise_enabled) return 0.0;
  return noise_counts_per_pulse_S * (mode == DetectorMode::Tes ? tes_noise_multiplier : 1.0);
}

double DetectorConfig::effective_noise_U() const {
  if (!noise_enabled) return 0.0;
  return noise_counts_per_pulse_U * (mode == DetectorMode::Tes ? tes_noise_multiplier : 1.0);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ValidationError, path + ": " + what);
}

void require_positive(const std::string& path, const std::string& name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) invalid(path, name + " must be positive");
}

void require_unit_interval(const std::string& path, double v) {
  if (!(v >= 0.0 && v <= 1.0)) invalid(path, "value must lie in [0, 1]");
}

void require_non_negative(const std::string& path, double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) invalid(path, "value must be non-negative");
}

}  // namespace

void ExperimentConfig::validate() const {
  require_positive("pump.center_wavelength_nm", "wavelength", pump.center_wavelength);
  require_positive("pump.fwhm_fs", "duration", pump.fwhm_duration);
  require_positive("pump.energy_nJ", "energy", pump.energy);
  require_positive("pump.repetition_rate_Hz", "repetition rate", pump.repetition_rate);
  require_positive("signal.center_wavelength_nm", "wavelength", signal.center_wavelength);
  require_positive("signal.fwhm_fs", "duration", signal.fwhm_duration);
  fiber.validate();
  geometry.validate();
  (void)grid.grid();
  if (pump.fwhm_duration >= grid.window / 4.0 || signal.fwhm_duration >= grid.window / 4.0) {
    invalid("grid.window_ps", "window must exceed four pulse durations");
  }
  require_non_negative("source.mean_photon_number", source.mean_photon_number);
  if (source.max_photon_cutoff < 1) invalid("source.max_photon_cutoff", "cutoff must be >= 1");
  require_unit_interval("detectors.herald_efficiency", detectors.herald_efficiency);
  require_unit_interval("detectors.system_transmittance", detectors.system_transmittance);
  require_non_negative("detectors.insertion_loss_dB", detectors.insertion_loss_db);
  require_non_negative("detectors.noise_counts_per_pulse_S", detectors.noise_counts_per_pulse_S);
  require_non_negative("detectors.noise_counts_per_pulse_U", detectors.noise_counts_per_pulse_U);
  require_positive("detectors.tes_noise_multiplier", "multiplier", detectors.tes_noise_multiplier);
  require_positive("detectors.coincidence_window_ps", "window", detectors.coincidence_window);
  for (double e : sweep.energies) {
    if (!(e >= 0.0) || !std::isfinite(e)) invalid("sweep.energies_nJ", "energies must be non-negative");
  }
  for (double d : sweep.delays) {
    if (!std::isfinite(d)) invalid("sweep.delays_ps", "delays must be finite");
  }
  if (propagation.steps < 8) invalid("propagation.steps", "steps must be >= 8");
  require_positive("calibration.energy_min_nJ", "energy", calibration.energy_min);
  if (!(calibration.energy_max > calibration.energy_min)) {
    invalid("calibration.energy_max_nJ", "energy_max must exceed energy_min");
  }
  if (monte_carlo.pulses < 1) invalid("monte_carlo.pulses", "pulses must be >= 1");
  if (spectrometer.dispersion == 0.0 || !std::isfinite(spectrometer.dispersion)) {
    invalid("spectrometer.dispersion_ps_per_nm", "dispersion must be non-zero");
  }
  require_non_negative("spectrometer.jitter_fwhm_ps", spectrometer.jitter_fwhm);
  require_positive("spectrometer.bin_width_ps", "bin width", spectrometer.bin_width);
}

// ---------------------------------------------------------------------------
// Document schema. One visitor drives both parsing and emission so the two can
// not drift apart. Numbers carry a scale from document units to SI.

namespace {

// Unit conversion shifts the decimal exponent of the shortest representation
// instead of multiplying, so 1550 nm reads as the double nearest 1550e-9 and
// emitted documents read back bit-exactly.
int decimal_exponent(double scale) { return static_cast<int>(std::lround(std::log10(scale))); }

double shift_decimal(double x, int exp10) {
  if (exp10 == 0 || x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
  std::string text(buf, end);
  int exponent = exp10;
  if (const auto e = text.find('e'); e != std::string::npos) {
    exponent += std::stoi(text.substr(e + 1));
    text.resize(e);
  }
  text += "e" + std::to_string(exponent);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

double to_si(double document_value, double scale) {
  return shift_decimal(document_value, decimal_exponent(scale));
}

// Inclusive range in document units, converted to SI.
std::vector<double> linspace_si(double start, double stop, std::int64_t count, double scale) {
  std::vector<double> out;
  for (std::int64_t i = 0; i < count; ++i) {
    const double x = count == 1 ? start
                                : start + (stop - start) * static_cast<double>(i) /
                                              static_cast<double>(count - 1);
    out.push_back(to_si(x, scale));
  }
  return out;
}

double to_document_units(double si, double scale) {
  const int exp10 = decimal_exponent(scale);
  const double guess = shift_decimal(si, -exp10);
  if (shift_decimal(guess, exp10) == si) return guess;
  double up = guess;
  double down = guess;
  for (int i = 0; i < 16; ++i) {
    up = std::nextafter(up, HUGE_VAL);
    down = std::nextafter(down, -HUGE_VAL);
    if (shift_decimal(up, exp10) == si) return up;
    if (shift_decimal(down, exp10) == si) return down;
  }
  return guess;
}

struct Reader {
  const json& doc;
  std::set<std::string>& known;

  const json* find(const char* section, const char* key) {
    const std::string path = section ? std::string(section) + "." + key : key;
    known.insert(path);
    if (section) {
      known.insert(section);
      auto s = doc.find(section);
      if (s == doc.end()) return nullptr;
      if (!s->is_object()) throw Error(ErrorKind::ParseError, std::string(section) + ": expected an object");
      auto k = s->find(key);
      return k == s->end() ? nullptr : &*k;
    }
    auto k = doc.find(key);
    return k == doc.end() ? nullptr : &*k;
  }

  static std::string path_of(const char* section, const char* key) {
    return section ? std::string(section) + "." + key : key;
  }

  void number(const char* section, const char* key, double& field, double scale = 1.0) {
    const json* v = find(section, key);
    if (!v) return;
    if (!v->is_number()) throw Error(ErrorKind::ParseError, path_of(section, key) + ": expected a number");
    field = to_si(v->get<double>(), scale);
  }

  template <typename Int>
  void integer(const char* section, const char* key, Int& field) {
    const json* v = find(section, key);
    if (!v) return;
    if (!v->is_number_integer()) {
      throw Error(ErrorKind::ParseError, path_of(section, key) + ": expected an integer");
    }
    if constexpr (std::is_unsigned_v<Int>) {
      if (v->is_number_unsigned() || v->get<std::int64_t>() >= 0) {
        field = v->get<Int>();
        return;
      }
      throw Error(ErrorKind::ValidationError, path_of(section, key) + ": value must be non-negative");
    } else {
      field = v->get<Int>();
    }
  }

  void boolean(const char* section, const char* key, bool& field) {
    const json* v = find(section, key);
    if (!v) return;
    if (!v->is_boolean()) throw Error(ErrorKind::ParseError, path_of(section, key) + ": expected true or false");
    field = v->get<bool>();
  }

  void mode(const char* section, const char* key, DetectorMode& field) {
    const json* v = find(section, key);
    if (!v) return;
    const std::string s = v->is_string() ? v->get<std::string>() : "";
    if (s == "snspd") field = DetectorMode::Snspd;
    else if (s == "tes") field = DetectorMode::Tes;
    else throw Error(ErrorKind::ParseError, path_of(section, key) + ": expected \"snspd\" or \"tes\"");
  }

  // Either an explicit array or {"start", "stop", "count"} (inclusive linspace).
  void axis(const char* section, const char* key, std::vector<double>& field, double scale) {
    const json* v = find(section, key);
    if (!v) return;
    const std::string path = path_of(section, key);
    std::vector<double> out;
    if (v->is_array()) {
      for (const auto& e : *v) {
        if (!e.is_number()) throw Error(ErrorKind::ParseError, path + ": expected numbers");
        out.push_back(to_si(e.get<double>(), scale));
      }
    } else if (v->is_object()) {
      if (!v->contains("start") || !v->contains("stop") || !v->contains("count") ||
          !(*v)["start"].is_number() || !(*v)["stop"].is_number() ||
          !(*v)["count"].is_number_integer()) {
        throw Error(ErrorKind::ParseError, path + ": range needs numeric start, stop and integer count");
      }
      const double start = (*v)["start"].get<double>();
      const double stop = (*v)["stop"].get<double>();
      const auto count = (*v)["count"].get<std::int64_t>();
      if (count < 1) throw Error(ErrorKind::ValidationError, path + ": count must be >= 1");
      out = linspace_si(start, stop, count, scale);
    } else {
      throw Error(ErrorKind::ParseError, path + ": expected an array or a range object");
    }
    field = std::move(out);
  }
};

struct Writer {
  json& doc;

  json& slot(const char* section, const char* key) { return section ? doc[section][key] : doc[key]; }

  void number(const char* section, const char* key, const double& field, double scale = 1.0) {
    slot(section, key) = to_document_units(field, scale);
  }
  template <typename Int>
  void integer(const char* section, const char* key, const Int& field) {
    slot(section, key) = field;
  }
  void boolean(const char* section, const char* key, const bool& field) { slot(section, key) = field; }
  void mode(const char* section, const char* key, const DetectorMode& field) {
    slot(section, key) = field == DetectorMode::Tes ? "tes" : "snspd";
  }
  void axis(const char* section, const char* key, const std::vector<double>& field, double scale) {
    json arr = json::array();
    for (double v : field) arr.push_back(to_document_units(v, scale));
    slot(section, key) = std::move(arr);
  }
};

template <typename Visitor, typename Config>
void visit(Visitor& v, Config& c) {
  using namespace units;
  v.number("pump", "center_wavelength_nm", c.pump.center_wavelength, kNano);
  v.number("pump", "fwhm_fs", c.pump.fwhm_duration, kFemto);
  v.number("pump", "energy_nJ", c.pump.energy, kNano);
  v.number("pump", "repetition_rate_Hz", c.pump.repetition_rate);

  v.number("signal", "center_wavelength_nm", c.signal.center_wavelength, kNano);
  v.number("signal", "fwhm_fs", c.signal.fwhm_duration, kFemto);

  v.number("fiber", "length_m", c.fiber.length);
  v.number("fiber", "beta2_pump_fs2_per_mm", c.fiber.beta2_pump, kFs2PerMm);
  v.number("fiber", "beta3_pump_fs3_per_mm", c.fiber.beta3_pump, kFs3PerMm);
  v.number("fiber", "beta2_signal_fs2_per_mm", c.fiber.beta2_signal, kFs2PerMm);
  v.number("fiber", "walkoff_ps_per_m", c.fiber.walkoff, kPico);
  v.number("fiber", "n2_m2_per_W", c.fiber.n2);
  v.number("fiber", "a_eff_um2", c.fiber.a_eff, 1e-12);
  v.number("fiber", "alpha_per_m", c.fiber.alpha);

  v.number("geometry", "theta_rad", c.geometry.theta);

  v.integer("grid", "n_samples", c.grid.n_samples);
  v.number("grid", "window_ps", c.grid.window, kPico);

  v.number("source", "mean_photon_number", c.source.mean_photon_number);
  v.integer("source", "max_photon_cutoff", c.source.max_photon_cutoff);

  v.mode("detectors", "mode", c.detectors.mode);
  v.number("detectors", "herald_efficiency", c.detectors.herald_efficiency);
  v.number("detectors", "insertion_loss_dB", c.detectors.insertion_loss_db);
  v.number("detectors", "system_transmittance", c.detectors.system_transmittance);
  v.number("detectors", "noise_counts_per_pulse_S", c.detectors.noise_counts_per_pulse_S);
  v.number("detectors", "noise_counts_per_pulse_U", c.detectors.noise_counts_per_pulse_U);
  v.boolean("detectors", "noise_enabled", c.detectors.noise_enabled);
  v.number("detectors", "tes_noise_multiplier", c.detectors.tes_noise_multiplier);
  v.number("detectors", "coincidence_window_ps", c.detectors.coincidence_window, kPico);

  v.axis("sweep", "energies_nJ", c.sweep.energies, kNano);
  v.axis("sweep", "delays_ps", c.sweep.delays, kPico);

  v.integer("propagation", "steps", c.propagation.steps);

  v.number("calibration", "energy_min_nJ", c.calibration.energy_min, kNano);
  v.number("calibration", "energy_max_nJ", c.calibration.energy_max, kNano);

  v.integer("monte_carlo", "pulses", c.monte_carlo.pulses);

  v.number("spectrometer", "dispersion_ps_per_nm", c.spectrometer.dispersion, kPsPerNm);
  v.number("spectrometer", "jitter_fwhm_ps", c.spectrometer.jitter_fwhm, kPico);
  v.number("spectrometer", "bin_width_ps", c.spectrometer.bin_width, kPico);

  v.integer(nullptr, "rng_seed", c.rng_seed);
}

bool is_blank(std::string_view text) {
  return text.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

SweepConfig ExperimentConfig::default_sweep() {
  return {linspace_si(0.0, 14.0, 29, units::kNano), linspace_si(-6.0, 6.0, 121, units::kPico)};
}

ParsedConfig parse_config(std::string_view text, const ParseOptions& options) {
  json doc;
  if (is_blank(text)) {
    doc = json::object();
  } else {
    try {
      doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be an object");

  ParsedConfig out;
  std::set<std::string> known;
  Reader reader{doc, known};
  try {
    visit(reader, out.config);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }

  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) {
      out.warnings.push_back("unknown key: " + key);
      continue;
    }
    if (!value.is_object()) continue;
    for (const auto& [sub, _] : value.items()) {
      if (!known.contains(key + "." + sub)) out.warnings.push_back("unknown key: " + key + "." + sub);
    }
  }
  if (options.strict && !out.warnings.empty()) {
    throw Error(ErrorKind::ParseError, out.warnings.front());
  }

  out.config.validate();
  return out;
}

std::string emit_config(const ExperimentConfig& config) {
  json doc = json::object();
  Writer writer{doc};
  visit(writer, config);
  return doc.dump(2) + "\n";
}

std::uint64_t config_hash(const ExperimentConfig& config) {
  const std::string canonical = emit_config(config);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace kerr
