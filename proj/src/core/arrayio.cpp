#include "sparserel/core/arrayio.hpp"

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace sparserel {

namespace {

constexpr std::uint32_t kVersion = 1;

enum class Dtype : std::uint8_t { f64 = 0, u8 = 1, i32 = 2 };

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

template <typename T>
void write_pod(std::FILE* f, const T& v) {
  if (std::fwrite(&v, sizeof(T), 1, f) != 1) throw std::runtime_error("arrayio: short write");
}

template <typename T>
T read_pod(std::FILE* f) {
  T v{};
  if (std::fread(&v, sizeof(T), 1, f) != 1) throw std::runtime_error("arrayio: short read");
  return v;
}

void write_bytes(std::FILE* f, const void* p, std::size_t n) {
  if (n && std::fwrite(p, 1, n, f) != n) throw std::runtime_error("arrayio: short write");
}

void read_bytes(std::FILE* f, void* p, std::size_t n) {
  if (n && std::fread(p, 1, n, f) != n) throw std::runtime_error("arrayio: short read");
}

}  // namespace

void ArrayFile::save(const std::string& path) const {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw std::runtime_error("arrayio: cannot open for write: " + path);
  write_pod(f.get(), kMagic);
  write_pod(f.get(), kVersion);
  write_pod(f.get(), config_hash);
  write_pod(f.get(), static_cast<std::uint64_t>(arrays.size()));
  for (const auto& [name, arr] : arrays) {
    write_pod(f.get(), static_cast<std::uint32_t>(name.size()));
    write_bytes(f.get(), name.data(), name.size());
    Dtype dt = !arr.f64.empty() || (arr.u8.empty() && arr.i32.empty()) ? Dtype::f64
               : !arr.u8.empty()                                       ? Dtype::u8
                                                                       : Dtype::i32;
    write_pod(f.get(), static_cast<std::uint8_t>(dt));
    write_pod(f.get(), static_cast<std::uint32_t>(arr.shape.size()));
    for (auto d : arr.shape) write_pod(f.get(), d);
    switch (dt) {
      case Dtype::f64:
        write_bytes(f.get(), arr.f64.data(), arr.f64.size() * sizeof(double));
        break;
      case Dtype::u8:
        write_bytes(f.get(), arr.u8.data(), arr.u8.size());
        break;
      case Dtype::i32:
        write_bytes(f.get(), arr.i32.data(), arr.i32.size() * sizeof(std::int32_t));
        break;
    }
  }
  if (std::fflush(f.get()) != 0) throw std::runtime_error("arrayio: flush failed: " + path);
}

ArrayFile ArrayFile::load(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw std::runtime_error("arrayio: cannot open: " + path);
  if (read_pod<std::uint32_t>(f.get()) != kMagic) throw std::runtime_error("arrayio: bad magic in " + path);
  if (read_pod<std::uint32_t>(f.get()) != kVersion) throw std::runtime_error("arrayio: unsupported version in " + path);
  ArrayFile out;
  out.config_hash = read_pod<std::uint64_t>(f.get());
  auto count = read_pod<std::uint64_t>(f.get());
  for (std::uint64_t i = 0; i < count; ++i) {
    auto name_len = read_pod<std::uint32_t>(f.get());
    std::string name(name_len, '\0');
    read_bytes(f.get(), name.data(), name_len);
    auto dt = static_cast<Dtype>(read_pod<std::uint8_t>(f.get()));
    auto ndim = read_pod<std::uint32_t>(f.get());
    NamedArray arr;
    arr.shape.resize(ndim);
    for (auto& d : arr.shape) d = read_pod<std::int64_t>(f.get());
    std::size_t n = static_cast<std::size_t>(arr.numel());
    switch (dt) {
      case Dtype::f64:
        arr.f64.resize(n);
        read_bytes(f.get(), arr.f64.data(), n * sizeof(double));
        break;
      case Dtype::u8:
        arr.u8.resize(n);
        read_bytes(f.get(), arr.u8.data(), n);
        break;
      case Dtype::i32:
        arr.i32.resize(n);
        read_bytes(f.get(), arr.i32.data(), n * sizeof(std::int32_t));
        break;
      default:
        throw std::runtime_error("arrayio: unknown dtype in " + path);
    }
    out.arrays.emplace(std::move(name), std::move(arr));
  }
  return out;
}

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace sparserel
