// Copyright the biphoton-contextuality developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

// Reproducible randomness helpers. std::mt19937_64 output is specified by the
// standard, but the <random> distributions are not; everything downstream of a
// seed therefore maps engine words to doubles by hand so that runs are
// bit-identical across standard libraries.

namespace biphoton {

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_double(rng);
}

/// One pair of independent standard normals (Box-Muller).
inline std::pair<double, double> gaussian_pair(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform_double(rng);  // (0, 1], keeps log finite
  const double u2 = uniform_double(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Independent engine for substream `index` of `seed`. Used to make restarts
/// and trials order-independent: substream(seed, i) never overlaps
/// substream(seed, j) in any way that matters at this scale.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t s = detail::splitmix64(detail::splitmix64(seed) ^ index);
  return std::mt19937_64(s);
}

}  // namespace biphoton
