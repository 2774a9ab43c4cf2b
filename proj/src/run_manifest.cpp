#include "heronian/run_manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "heronian/corpus_io.hpp"
#include "json.hpp"

namespace heronian {

using nlohmann::json;

bool RunManifest::all_shards_complete() const {
  if (shards.empty()) return false;
  for (const auto& s : shards)
    if (!s.complete) return false;
  return true;
}

bool RunManifest::compatible_with(const RunManifest& o) const {
  if (command != o.command || n != o.n || algorithm != o.algorithm || shards.size() != o.shards.size())
    return false;
  for (std::size_t i = 0; i < shards.size(); ++i)
    if (shards[i].range.first != o.shards[i].range.first || shards[i].range.last != o.shards[i].range.last)
      return false;
  return true;
}

std::string manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["n"] = m.n;
  j["algorithm"] = m.algorithm;
  j["corpus"] = m.corpus_path;
  j["complete"] = m.complete;
  j["tool_version"] = m.tool_version;
  j["created"] = m.created;
  j["updated"] = m.updated;
  json shards = json::array();
  for (const auto& s : m.shards)
    shards.push_back({{"index", s.index},
                      {"first", s.range.first},
                      {"last", s.range.last},
                      {"complete", s.complete},
                      {"path", s.path},
                      {"triangles", s.triangles}});
  j["shards"] = std::move(shards);
  if (!m.cross_validation.empty()) j["cross_validation"] = json::parse(m.cross_validation);
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.n = j.at("n").get<u64>();
    m.algorithm = j.at("algorithm").get<std::string>();
    m.corpus_path = j.at("corpus").get<std::string>();
    m.complete = j.at("complete").get<bool>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.created = j.value("created", "");
    m.updated = j.value("updated", "");
    for (const auto& s : j.at("shards"))
      m.shards.push_back({s.at("index").get<u64>(),
                          {s.at("first").get<u64>(), s.at("last").get<u64>()},
                          s.at("complete").get<bool>(),
                          s.at("path").get<std::string>(),
                          s.value("triangles", u64{0})});
    if (j.contains("cross_validation")) m.cross_validation = j["cross_validation"].dump();
    return m;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed manifest: ") + e.what());
  }
}

std::optional<RunManifest> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return manifest_from_json(text.str());
}

void save_manifest(const std::filesystem::path& path, RunManifest m) {
  if (m.created.empty()) m.created = utc_timestamp();
  m.updated = utc_timestamp();
  write_file_atomically(path, manifest_to_json(m));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace heronian
