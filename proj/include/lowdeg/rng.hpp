#pragma once

#include <cmath>
#include <cstdint>

namespace lowdeg {

// Counter-based generator: the i-th output is a pure function of
// (seed, stream, i), so parallel workers with forked streams produce
// identical values regardless of scheduling or thread count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))), ctr_(0) {}

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++ctr_); }

  // Uniform in [0, n) by rejection; exact for every n.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = n * (~0ull / n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  int next_trit() { return static_cast<int>(next_below(3)); }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller on two counter draws.
  double next_gaussian() {
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Independent child stream; deterministic in (seed, stream) only.
  CounterRng fork(std::uint64_t stream) const { return CounterRng(key_, stream + 1); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace lowdeg
