#include "kerrswitch/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "kerrswitch/error.hpp"

namespace kerr {

std::string RunManifest::to_json() const {
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(config_hash));
  nlohmann::ordered_json j;
  j["command"] = command;
  j["config_hash"] = hash;
  j["tool_version"] = tool_version;
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  j["seed"] = seed;
  j["workers"] = workers;
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& o : outputs) {
    j["outputs"].push_back(
        {{"name", o.name}, {"path", o.path.string()}, {"rows", o.rows}, {"bytes", o.bytes}});
  }
  return j.dump(2) + "\n";
}

std::string utc_timestamp() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + path.parent_path().string());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot rename onto " + path.string());
}

}  // namespace kerr
