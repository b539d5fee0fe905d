// Copyright 2026 The Brickwall Authors
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

#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

namespace brickwall {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; a bijective scrambler for 64-bit values.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for task `keys` under `master`. Independent of evaluation order,
/// so parallel sweeps reproduce serial ones.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = mix64(master);
  for (auto k : keys) h = mix64(h ^ mix64(k));
  return h;
}

inline std::uint64_t hash_string(std::string_view s) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// d angles drawn uniformly from [0, 2 pi).
inline std::vector<double> uniform_angles(int d, Rng& rng) {
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  std::vector<double> theta(static_cast<std::size_t>(d));
  for (auto& t : theta) t = dist(rng);
  return theta;
}

inline std::vector<double> normal_angles(int d, double sigma, Rng& rng) {
  std::normal_distribution<double> dist(0.0, sigma);
  std::vector<double> theta(static_cast<std::size_t>(d));
  for (auto& t : theta) t = dist(rng);
  return theta;
}

}  // namespace brickwall
