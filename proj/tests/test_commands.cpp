#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "kerrswitch/commands.hpp"
#include "kerrswitch/config.hpp"
#include "kerrswitch/csv.hpp"
#include "kerrswitch/error.hpp"

namespace kerr {
namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("kerrswitch_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

ExperimentConfig quick_config() {
  ExperimentConfig c;
  c.grid.n_samples = 8192;
  c.sweep.energies = {0.0, 4e-9, 8e-9, 12e-9};
  c.sweep.delays.clear();
  for (int i = -12; i <= 12; ++i) c.sweep.delays.push_back(i * 0.25e-12);
  c.monte_carlo.pulses = 20000;
  return c;
}

void expect_manifest_lists_outputs(const fs::path& dir, const RunManifest& m) {
  const auto doc = nlohmann::json::parse(slurp(dir / "manifest.json"));
  EXPECT_EQ(doc["outputs"].size(), m.outputs.size());
  for (const auto& o : m.outputs) {
    ASSERT_TRUE(fs::exists(dir / o.name)) << o.name;
    EXPECT_GT(fs::file_size(dir / o.name), 0u);
  }
  EXPECT_EQ(doc["tool_version"], kToolVersion);
}

TEST(Csv, QuotingAndTermination) {
  EXPECT_EQ(csv::quote("plain"), "plain");
  EXPECT_EQ(csv::quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  csv::Writer w({"x", "y"});
  w.row({"1", "2"});
  EXPECT_EQ(w.text(), "x,y\n1,2\n");
  EXPECT_EQ(csv::number(0.5), "0.5");
  EXPECT_EQ(csv::number(-6.0), "-6");
}

TEST(Commands, SweepWritesOutputsAndIsReproducible) {
  const auto c = quick_config();
  const auto a = fresh_dir("sweep_a");
  const auto b = fresh_dir("sweep_b");
  const auto m = cmd_sweep(c, {a, 1});
  cmd_sweep(c, {b, 2});
  expect_manifest_lists_outputs(a, m);
  for (const char* f : {"surface.csv", "energy_slice.csv", "delay_slice.csv", "metrics.json"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  const auto surface = read_csv(a / "surface.csv");
  ASSERT_EQ(surface.size(), 1 + c.sweep.delays.size());
  EXPECT_EQ(surface[0][0], "delay_ps\\energy_nJ");
  EXPECT_EQ(surface[0].size(), 1 + c.sweep.energies.size());
  const auto metrics = nlohmann::json::parse(slurp(a / "metrics.json"));
  EXPECT_EQ(metrics["status"], "ok");
  EXPECT_GE(metrics["eta_max"].get<double>(), 0.99);
}

TEST(Commands, SingleCellSweepHasInsufficientSamples) {
  auto c = quick_config();
  c.sweep.energies = {8e-9};
  c.sweep.delays = {0.0};
  const auto dir = fresh_dir("sweep_1x1");
  cmd_sweep(c, {dir, 1});
  const auto surface = read_csv(dir / "surface.csv");
  ASSERT_EQ(surface.size(), 2u);
  EXPECT_EQ(surface[1].size(), 2u);
  const auto metrics = nlohmann::json::parse(slurp(dir / "metrics.json"));
  EXPECT_EQ(metrics["status"], "insufficient samples");
  EXPECT_TRUE(metrics["fw10db_ps"].is_null());
}

TEST(Commands, FockSingleHeraldSumsToOne) {
  const auto c = quick_config();
  const auto dir = fresh_dir("fock1");
  const auto m = cmd_fock(c, 1, {dir, 0});
  expect_manifest_lists_outputs(dir, m);
  const auto rows = read_csv(dir / "fock_probs.csv");
  EXPECT_EQ(rows[0], (std::vector<std::string>{"delay_ps", "N", "n_S", "n_U", "probability", "stderr", "kind"}));
  std::map<std::string, double> total;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][6] == "exact") total[rows[i][0]] += std::stod(rows[i][4]);
  }
  EXPECT_EQ(total.size(), c.sweep.delays.size());
  for (const auto& [delay, t] : total) EXPECT_NEAR(t, 1.0, 1e-12) << delay;
}

TEST(Commands, FockRejectsOutOfRangeN) {
  EXPECT_THROW(cmd_fock(quick_config(), 11, {fresh_dir("fock_bad"), 1}), Error);
}

TEST(Commands, SpectrumRowsAndWidths) {
  const auto c = quick_config();
  const auto dir = fresh_dir("spectrum");
  const auto m = cmd_spectrum(c, {dir, 1});
  expect_manifest_lists_outputs(dir, m);
  const auto widths = read_csv(dir / "pump_spectral_widths.csv");
  ASSERT_EQ(widths.size(), 1 + c.sweep.energies.size());
  double previous = 0.0;
  for (std::size_t i = 1; i < widths.size(); ++i) {
    const double w = std::stod(widths[i][1]);
    EXPECT_GE(w, previous);
    previous = w;
  }
  const auto summary = nlohmann::json::parse(slurp(dir / "spectrum_summary.json"));
  EXPECT_LT(summary["tof_total_variation"].get<double>(), 1e-3);
}

TEST(Commands, UnwritableDirectoryIsAnIoError) {
  const auto file = fresh_dir("io") / "not_a_dir";
  std::ofstream(file) << "x";
  try {
    cmd_calibrate(quick_config(), {file / "sub", 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

}  // namespace
}  // namespace kerr
