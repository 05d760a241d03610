#pragma once

#include <cmath>
#include <cstdint>

namespace sparserel {

// Counter-based deterministic RNG. All sampling in the project goes through
// this instead of <random> so that streams are reproducible bit-for-bit
// across platforms and standard library versions. Streams are derived by
// hashing (seed, index, stream) triples, which makes per-sample generation a
// pure function and safe to shard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  static Rng for_index(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0) {
    std::uint64_t s = mix(seed + 0x9e3779b97f4a7c15ull * (index + 1));
    s = mix(s ^ (0xbf58476d1ce4e5b9ull * (stream + 1)));
    return Rng(raw(s));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    // 128-bit multiply keeps the mapping unbiased enough for n << 2^64
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  int uniform_int(int lo, int hi_exclusive) {
    return lo + static_cast<int>(uniform_int(static_cast<std::uint64_t>(hi_exclusive - lo)));
  }

  bool coin() { return (next_u64() & 1ull) != 0; }

  // Box-Muller; implementation-defined std::normal_distribution is avoided on purpose.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double gumbel() {
    double u = uniform();
    if (u < 1e-300) u = 1e-300;
    return -std::log(-std::log(u));
  }

  template <typename T>
  void shuffle(T* data, std::size_t n) {
    for (std::size_t i = n; i > 1; --i) {
      std::size_t j = uniform_int(i);
      T tmp = data[i - 1];
      data[i - 1] = data[j];
      data[j] = tmp;
    }
  }

 private:
  struct RawTag {};
  Rng(std::uint64_t s, RawTag) : state_(s) {}
  static Rng raw(std::uint64_t s) { return Rng(s, RawTag{}); }

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sparserel
