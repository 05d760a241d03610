#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace sparserel {

using Json = nlohmann::json;

// Hash of the canonical (key-sorted) serialization; stable under key
// re-ordering in the source file.
std::uint64_t config_hash(const Json& j);

std::string hash_hex(std::uint64_t h);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Thrown on schema violations; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sparserel
