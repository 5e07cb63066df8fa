#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hurwitz::cli {

inline constexpr const char* kEngineVersion = "hurwitz-0.1.0";

struct CacheRecord {
  std::string key;  // SHA-256 of engine version and canonical spec
  nlohmann::json spec;
  std::string value;
  std::string engine_version;
  std::string timestamp;  // UTC, ISO 8601
};

// Append-only JSON-lines store. Every write replaces the file by atomic rename, so readers never
// see a torn file; concurrent writers may drop each other's newest record but never corrupt the store.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir);

  // Flag, then HURWITZ_CACHE_DIR, then $XDG_CACHE_HOME/hurwitz, then ~/.cache/hurwitz.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);
  static std::string key_of(const std::string& canonical_spec);

  std::optional<std::string> lookup(const std::string& canonical_spec) const;
  void store(const std::string& canonical_spec, const nlohmann::json& spec, const std::string& value);
  std::vector<CacheRecord> records() const;
  void clear();

  const std::filesystem::path& file() const { return file_; }

private:
  std::filesystem::path dir_;
  std::filesystem::path file_;
};

}  // namespace hurwitz::cli
