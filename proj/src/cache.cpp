#include "qtpaths/cache.hpp"

#include <openssl/sha.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qtpaths/error.hpp"

namespace qtpaths {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char b : digest) {
    out += hex[b >> 4];
    out += hex[b & 15];
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<ResultCache> ResultCache::open(const std::string& flag_dir) {
  if (!flag_dir.empty()) return ResultCache(flag_dir);
  if (const char* env = std::getenv("QTPATHS_CACHE"); env && *env) return ResultCache(env);
  return std::nullopt;
}

std::string ResultCache::key(const std::string& command, const nlohmann::json& params) {
  // nlohmann::json objects serialize with sorted keys, so dump() is canonical
  nlohmann::json k{{"command", command}, {"params", params}, {"version", kLibraryVersion}};
  return sha256_hex(k.dump());
}

std::optional<nlohmann::json> ResultCache::load(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // torn or foreign file: recompute
  }
}

void ResultCache::store(const std::string& key, const nlohmann::json& value) const {
  const auto final_path = dir_ / (key + ".json");
  const auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write cache file " + tmp.string());
    out << value.dump();
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace qtpaths
