#pragma once

#include <cstdint>
#include <random>

namespace herd {

// All randomness in the project flows through these helpers. std::mt19937_64
// output is pinned by the standard; the distribution mappings below are ours,
// so sequences are reproducible across platforms and library versions.
using Rng = std::mt19937_64;

// Derives an independent stream from (seed, stream_id) via splitmix64 so
// sub-systems never share or race a generator.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream_id + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream_id = 0) {
  return Rng(derive_seed(seed, stream_id));
}

// Uniform in [0, 1).
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n).
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

// Standard normal via Box-Muller (one value per call; the sibling is dropped
// to keep consumption counts predictable).
inline double gaussian(Rng& rng) {
  double u1;
  do {
    u1 = uniform01(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Gaussian with the given sigma, hard-clipped to [-clip, +clip].
inline double clipped_gaussian(Rng& rng, double sigma, double clip) {
  double v = gaussian(rng) * sigma;
  if (v > clip) v = clip;
  if (v < -clip) v = -clip;
  return v;
}

// Noise convention used for all "in a small range between -r and +r" values:
// sigma = r/2, clipped at +-r.
inline double range_noise(Rng& rng, double range) {
  return clipped_gaussian(rng, range * 0.5, range);
}

// Triangular(a, c, b) with mode c, via inverse CDF.
inline double triangular(Rng& rng, double a, double c, double b) {
  const double u = uniform01(rng);
  const double fc = (c - a) / (b - a);
  if (u < fc) return a + std::sqrt(u * (b - a) * (c - a));
  return b - std::sqrt((1.0 - u) * (b - a) * (b - c));
}

}  // namespace herd
