#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace popsim {

// Counter-based random numbers. Every draw is addressed by (seed, counter),
// so noise synthesis is reproducible and order-independent: parallel and
// serial evaluation produce identical streams.

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_at(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
}

// uniform in (0, 1), never exactly 0 or 1
inline double uniform01_at(std::uint64_t seed, std::uint64_t counter) {
  return (static_cast<double>(stream_at(seed, counter) >> 11) + 0.5) *
         (1.0 / 9007199254740992.0);
}

// standard normal via Box-Muller on counters 2k, 2k+1
inline double gaussian_at(std::uint64_t seed, std::uint64_t k) {
  const double u1 = uniform01_at(seed, 2 * k);
  const double u2 = uniform01_at(seed, 2 * k + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// stable sub-stream seed for a named pipeline stage
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  return mix64(base ^ fnv1a64(tag));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return stream_at(base, index);
}

}  // namespace popsim
