#include "sparserel/core/config.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "sparserel/core/arrayio.hpp"

namespace sparserel {

std::uint64_t config_hash(const Json& j) {
  // nlohmann::json::dump emits object keys in sorted order, which gives the
  // canonical form directly.
  const std::string s = j.dump();
  return fnv1a64(s.data(), s.size());
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace sparserel
