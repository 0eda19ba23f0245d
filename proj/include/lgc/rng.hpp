#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lgc {

// SplitMix64 mixing step.  Used to derive decorrelated per-trial seeds from a
// master seed so that trial t of a run is reproducible in isolation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
  return std::mt19937_64(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_id + 1)));
}

// Uniform double in [0, 1) built from the top 53 bits of the engine output.
// Hand-rolled so results do not depend on the standard library's
// distribution implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n).  Rejection sampling, no modulo bias.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % n;
}

// Number of failures before the next success in a Bernoulli(p) sequence.
// Lets edge generators skip directly to the next sampled pair; the joint
// distribution matches independent per-pair draws.
inline std::uint64_t geometric_skip(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return 0;
  const double u = uniform01(rng);
  const double g = std::floor(std::log1p(-u) / std::log1p(-p));
  if (g >= 0x1.0p62) return UINT64_C(1) << 62;
  return static_cast<std::uint64_t>(g);
}

}  // namespace lgc
