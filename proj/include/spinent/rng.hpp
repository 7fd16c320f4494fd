#pragma once

#include <cstdint>
#include <random>

#include "spinent/matrix.hpp"

namespace spinent {

// Seeded random stream with hand-rolled conversions. The standard
// distribution objects are implementation-defined, so results would not
// be reproducible across standard libraries; raw mt19937_64 draws are.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  cplx normal_complex() { return cplx(normal(), normal()); }

  std::uint64_t bits() { return engine_(); }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Decorrelates derived seeds (per-sample substreams) from a base seed and
// an index; splitmix64 finalizer.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace spinent
