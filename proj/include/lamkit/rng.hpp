#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

// Deterministic sampling helpers. Everything here is pinned to the
// std::mt19937_64 output sequence (which the standard fully specifies),
// so seeded runs reproduce bit-for-bit across platforms. Distribution
// adapters from <random> are implementation-defined and must not be used
// for anything that ends up in an output file.

namespace lamkit {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Lemire's multiply-shift reduction; the slight
// modulo bias at n near 2^64 is irrelevant for index shuffling.
inline std::uint64_t bounded(Rng& rng, std::uint64_t n) {
  const auto wide = static_cast<unsigned __int128>(rng()) * n;
  return static_cast<std::uint64_t>(wide >> 64);
}

// Standard normal via Box-Muller (cosine branch). Each call consumes two
// uniforms; the sine mate is discarded to keep the draw stateless.
inline double standard_normal(Rng& rng) {
  const double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Fisher-Yates with the bounded() reduction above.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}
