#pragma once

#include <cstdint>
#include <vector>

#include "nilflow/rat.hpp"

namespace nilflow {

/// splitmix64 stream; bit-stable across platforms, unlike the standard
/// library distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  Rat rat(long num_lo, long num_hi, long den_lo, long den_hi) {
    return Rat(uniform(num_lo, num_hi), uniform(den_lo, den_hi));
  }

  /// Sample point in the coalgebra: numerators in [-20,20], denominators
  /// in [1,10] (the generic-rank sampling convention).
  std::vector<Rat> coalgebra_point(int n) {
    std::vector<Rat> p;
    p.reserve(n);
    for (int i = 0; i < n; ++i) p.push_back(rat(-20, 20, 1, 10));
    return p;
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace nilflow
