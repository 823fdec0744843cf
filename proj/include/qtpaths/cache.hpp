#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace qtpaths {

inline constexpr const char* kLibraryVersion = "0.1.0";

// Content-addressed JSON store. Keys are SHA-256 of (command, parameters,
// library version); files are written to a temporary name and renamed.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // Directory from the flag if non-empty, else from QTPATHS_CACHE, else none.
  static std::optional<ResultCache> open(const std::string& flag_dir);

  static std::string key(const std::string& command, const nlohmann::json& params);

  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& value) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

std::string sha256_hex(const std::string& data);

}  // namespace qtpaths
