#include "cache.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <unistd.h>

#include "hurwitz/errors.hpp"

namespace hurwitz::cli {

namespace fs = std::filesystem;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::optional<CacheRecord> parse_record(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("value")) return std::nullopt;
  return CacheRecord{j.value("key", ""), j.value("spec", nlohmann::json::object()), j.value("value", ""),
                     j.value("engine_version", ""), j.value("timestamp", "")};
}

}  // namespace

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)), file_(dir_ / "results.jsonl") {}

fs::path ResultCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("HURWITZ_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "hurwitz";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hurwitz";
  return fs::temp_directory_path() / "hurwitz-cache";
}

std::string ResultCache::key_of(const std::string& canonical_spec) {
  const std::string text = std::string(kEngineVersion) + "\n" + canonical_spec;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw InvariantViolation("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::vector<CacheRecord> ResultCache::records() const {
  std::vector<CacheRecord> out;
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (auto rec = parse_record(line)) out.push_back(std::move(*rec));
  }
  return out;
}

std::optional<std::string> ResultCache::lookup(const std::string& canonical_spec) const {
  const auto key = key_of(canonical_spec);
  std::optional<std::string> found;
  for (const auto& rec : records())
    if (rec.key == key) found = rec.value;
  return found;
}

void ResultCache::store(const std::string& canonical_spec, const nlohmann::json& spec, const std::string& value) {
  fs::create_directories(dir_);
  nlohmann::json rec{{"key", key_of(canonical_spec)},
                     {"spec", spec},
                     {"value", value},
                     {"engine_version", kEngineVersion},
                     {"timestamp", utc_now()}};
  std::random_device rd;
  const fs::path tmp = dir_ / ("results.jsonl.tmp." + std::to_string(::getpid()) + "." + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InvalidInput("cannot write cache file in " + dir_.string());
    std::ifstream in(file_, std::ios::binary);
    if (in && in.peek() != std::ifstream::traits_type::eof()) out << in.rdbuf();
    out << rec.dump() << '\n';
    if (!out) throw InvalidInput("cannot write cache file in " + dir_.string());
  }
  fs::rename(tmp, file_);
}

void ResultCache::clear() {
  std::error_code ec;
  fs::remove(file_, ec);
}

}  // namespace hurwitz::cli
