#pragma once

#include <cstdint>

namespace fvlt {

// splitmix64: 64-bit state-transition generator (Steele, Lea, Flood 2014).
// Chosen for bit-exact reproducibility across platforms; the path generator
// and the verification samplers document their draw order on top of it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits; pure integer-to-double scaling.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace fvlt
