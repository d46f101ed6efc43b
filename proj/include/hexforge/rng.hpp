#pragma once

#include <cstdint>

namespace hexforge::rng {

// SplitMix64 finalizer. All randomness in the project flows through these
// counter-based hashes, so results do not depend on evaluation order and
// coupled sampling across parameters is possible.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ (b + 0x9e3779b97f4a7c15ull));
}

constexpr std::uint64_t hash3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return hash2(hash2(a, b), c);
}

constexpr std::uint64_t hash4(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                              std::uint64_t d) {
  return hash2(hash3(a, b, c), d);
}

// Uniform double in [0,1) from 53 high bits.
constexpr double u01(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Fair coin mapped to {+1,-1}.
constexpr int pm1(std::uint64_t x) { return (x & 1ull) ? -1 : +1; }

// Small counter-based stream for places that want a sequence of draws.
struct Stream {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;
  std::uint64_t next() { return hash2(seed, counter++); }
  double next_u01() { return u01(next()); }
  int next_pm1() { return pm1(next()); }
};

}  // namespace hexforge::rng
