#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace pego {

using Rng = std::mt19937_64;

// Uniform draw in [0,1) from the top 53 bits. Avoids the
// implementation-defined std::uniform_real_distribution so that seeded
// streams are reproducible across standard libraries.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Box-Muller without the cached spare value; two uniforms per draw.
inline double normal01(Rng& rng) {
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586477 * u2);
}

inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step; decorrelates the oracle stream from the run stream.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// First n points of the d-dimensional Halton sequence (prime bases,
// index starting at 1), in the unit hypercube.
Eigen::MatrixXd halton_points(int n, int d);

}  // namespace pego
