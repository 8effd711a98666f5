#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace tourcast {

// All randomized code draws through the helpers below so runs replay from the
// seed alone: std::mt19937_64 is fully specified by the standard, while the
// std::uniform_*_distribution adaptors are implementation-defined and would
// tie results to one standard library.
using Rng = std::mt19937_64;

inline constexpr const char* kRngAlgorithm = "mt19937_64/reject-index/53bit-unit";

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  assert(n > 0);
  const std::uint64_t lo = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = rng();
  while (x < lo) x = rng();
  return x % n;
}

// Uniform integer in [lo, hi], bounds inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  assert(lo <= hi);
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(uniform_index(rng, span));
}

// Uniform double in [0, 1) with 53 random mantissa bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace tourcast
