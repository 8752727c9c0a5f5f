// Copyright Contributors to the nerfkit Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace nerfkit {

// splitmix64 finalizer; also used to derive stream seeds from labels.
inline std::uint64_t hash_mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return hash_mix(seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2)));
}

template <class... Rest>
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v, Rest... rest) {
  return hash_combine(hash_combine(seed, v), rest...);
}

// Labels for the sub-streams derived from one master seed. Every source of
// randomness in the toolkit hangs off one of these, so a single --seed pins
// the whole pipeline.
namespace stream {
inline constexpr std::uint64_t kSubject = 0x01;   // procedural subject generation
inline constexpr std::uint64_t kInit = 0x02;      // MLP weight initialization
inline constexpr std::uint64_t kSupport = 0x03;   // support-phase ray batches
inline constexpr std::uint64_t kQuery = 0x04;     // query-phase ray batches
inline constexpr std::uint64_t kJoint = 0x05;     // joint-pretraining ray batches
inline constexpr std::uint64_t kFinetune = 0x06;  // finetuning ray batches
inline constexpr std::uint64_t kPixel = 0x07;     // per-pixel depth jitter in renders
inline constexpr std::uint64_t kRay = 0x08;       // per-ray depth jitter in batches
}  // namespace stream

// Small deterministic generator (splitmix64 core). All sampling code uses
// this instead of <random> distributions so that results are reproducible
// down to the bit across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(hash_mix(seed)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via Box-Muller (no state caching, two draws per call).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace nerfkit
