#pragma once

#include <cstdint>
#include <random>

namespace netmean {

// splitmix64 finalizer. Used to turn additively derived seeds (base + index)
// into decorrelated engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the k-th independent stream under a base seed. Streams are
// reproducible across platforms: mt19937_64 output is fully specified
// by the standard.
constexpr std::uint64_t derived_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) + index);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

// Uniform double in [0,1) built directly from the raw 64-bit output, so the
// value stream does not depend on the standard library's distribution
// implementation.
inline double next_uniform(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace netmean
