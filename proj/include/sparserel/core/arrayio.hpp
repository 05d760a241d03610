#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace sparserel {

// Flat binary container of named arrays, little-endian, with a small header
// carrying a magic, a format version and the config hash of whatever produced
// the file. Used for both dataset caches and model checkpoints so round-trips
// are bit-exact.
struct NamedArray {
  std::vector<std::int64_t> shape;
  // exactly one of these is populated, per dtype
  std::vector<double> f64;
  std::vector<std::uint8_t> u8;
  std::vector<std::int32_t> i32;

  std::int64_t numel() const {
    std::int64_t n = 1;
    for (auto d : shape) n *= d;
    return n;
  }
};

class ArrayFile {
 public:
  static constexpr std::uint32_t kMagic = 0x53524131;  // "SRA1"

  std::uint64_t config_hash = 0;
  std::map<std::string, NamedArray> arrays;

  void save(const std::string& path) const;
  // throws std::runtime_error on missing file or malformed header
  static ArrayFile load(const std::string& path);
};

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace sparserel
