#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace kerr {

inline constexpr const char* kToolVersion = "0.1.0";

struct ManifestOutput {
  std::string name;
  std::filesystem::path path;
  std::uint64_t rows = 0;
  std::uint64_t bytes = 0;
};

struct RunManifest {
  std::string command;
  std::uint64_t config_hash = 0;
  std::string tool_version = kToolVersion;
  std::string started_at;
  std::string finished_at;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::vector<ManifestOutput> outputs;

  std::string to_json() const;
};

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

/// Writes `text` to `path` atomically enough for a single writer (temp file +
/// rename). Throws Error{IoError}.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace kerr
