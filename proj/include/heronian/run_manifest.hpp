#pragma once

// JSON manifest for resumable sharded runs.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "heronian/generate.hpp"

namespace heronian {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct ShardRecord {
  u64 index = 0;
  LoopRange range;
  bool complete = false;
  std::string path;  // shard corpus file, relative to the manifest
  u64 triangles = 0;
};

struct RunManifest {
  std::string command;
  u64 n = 0;
  std::string algorithm;
  std::vector<ShardRecord> shards;
  std::string corpus_path;
  bool complete = false;  // set only once every shard is complete and merged
  std::string tool_version{kToolVersion};
  std::string created;
  std::string updated;
  std::string cross_validation;  // JSON text of the report, when run

  bool all_shards_complete() const;
  // Same run parameters (command, n, algorithm, shard layout).
  bool compatible_with(const RunManifest& other) const;
};

std::string manifest_to_json(const RunManifest& m);
// Throws std::runtime_error on malformed input.
RunManifest manifest_from_json(const std::string& text);

std::optional<RunManifest> load_manifest(const std::filesystem::path& path);
void save_manifest(const std::filesystem::path& path, RunManifest m);

std::string utc_timestamp();

}  // namespace heronian
