// Command-line front end: sweep, fock, spectrum, calibrate, validate-config.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kerrswitch/commands.hpp"
#include "kerrswitch/config.hpp"
#include "kerrswitch/error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSimulation = 3;
constexpr int kExitIo = 4;

int exit_code_for(kerr::ErrorKind kind) {
  using kerr::ErrorKind;
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
      return kExitConfig;
    case ErrorKind::IoError:
      return kExitIo;
    default:
      return kExitSimulation;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kerr::Error(kerr::ErrorKind::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kerr-switch simulator: XPM switching of heralded telecom photons"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool strict = false;
  int n_max = 6;

  auto add_common = [&](CLI::App* sub, bool with_output) {
    sub->add_option("--config", config_path, "Experiment config (JSON); defaults when omitted");
    sub->add_flag("--strict", strict, "Reject unknown config keys");
    if (with_output) {
      sub->add_option("--out", out_dir, "Output directory (default $KERRSWITCH_OUT_DIR or .)");
      sub->add_option("--seed", seed, "Override rng_seed");
      sub->add_option("--workers", workers, "Worker threads (0 = all cores)");
    }
  };

  auto* sweep = app.add_subcommand("sweep", "Switching efficiency over pump energy and delay");
  auto* fock = app.add_subcommand("fock", "Heralded N-photon splitting versus delay");
  auto* spectrum = app.add_subcommand("spectrum", "Pump spectra and signal time-of-flight histograms");
  auto* calibrate = app.add_subcommand("calibrate", "Pump energy of maximum switching at zero delay");
  auto* validate = app.add_subcommand("validate-config", "Parse, validate and print a config");
  for (auto* sub : {sweep, fock, spectrum, calibrate}) add_common(sub, true);
  add_common(validate, false);
  fock->add_option("--n-max", n_max, "Largest heralded photon number (1..10)");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string text = config_path.empty() ? std::string() : read_file(config_path);
    kerr::ParsedConfig parsed = kerr::parse_config(text, {.strict = strict});
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    kerr::ExperimentConfig& config = parsed.config;
    if (sweep->parsed() || fock->parsed() || spectrum->parsed() || calibrate->parsed()) {
      for (auto* sub : {sweep, fock, spectrum, calibrate}) {
        if (sub->parsed() && sub->count("--seed") > 0) config.rng_seed = seed;
      }
    }

    if (validate->parsed()) {
      std::cout << kerr::emit_config(config);
      return kExitOk;
    }

    kerr::RunOptions options;
    options.workers = workers;
    if (!out_dir.empty()) {
      options.out_dir = out_dir;
    } else if (const char* env = std::getenv("KERRSWITCH_OUT_DIR")) {
      options.out_dir = env;
    }

    kerr::RunManifest manifest;
    if (sweep->parsed()) manifest = kerr::cmd_sweep(config, options);
    if (fock->parsed()) manifest = kerr::cmd_fock(config, n_max, options);
    if (spectrum->parsed()) manifest = kerr::cmd_spectrum(config, options);
    if (calibrate->parsed()) manifest = kerr::cmd_calibrate(config, options);
    for (const auto& o : manifest.outputs) {
      std::cout << o.path.string() << " (" << o.rows << " rows, " << o.bytes << " bytes)\n";
    }
    return kExitOk;
  } catch (const kerr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
