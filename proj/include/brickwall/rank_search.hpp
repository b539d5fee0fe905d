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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "brickwall/circuit.hpp"
#include "brickwall/matrix_io.hpp"

namespace brickwall {

struct RankReport {
  int rank = 0;
  bool full = false;
  long target = 0;  // group dimension
  std::vector<double> theta;  // sample that produced `rank`
  double rel_tol = 1e-8;
  int samples = 0;
};

/// Samples theta uniformly on [0, 2 pi)^d and computes the real Jacobian
/// rank. A deficient sample is retried up to `retries` times with fresh
/// angles; the best rank wins.
RankReport rank_test(const Circuit& c, GroupLabel group, std::uint64_t seed, int retries = 2,
                     double rel_tol = 1e-8);
/// Rank at a given parameter vector.
int jacobian_rank(const Circuit& c, std::span<const double> theta, double rel_tol = 1e-8);

struct AnsatzSpec {
  int n = 3;
  std::vector<std::pair<int, int>> pairs;

  /// Pair alphabet index per position, e.g. "0110" with (0,1) -> 0, (1,2) -> 1.
  std::string bits(const std::vector<std::pair<int, int>>& alphabet) const;
  AnsatzSpec reversed() const;
};

/// (k, k+1) for k < n-1 if nearest-neighbour only, else every pair a < b.
std::vector<std::pair<int, int>> pair_alphabet(int n, bool nearest_neighbour_only);

/// Calls `sink` once per admissible spec in lexicographic alphabet order.
/// With `forbid_four_repeats`, no four consecutive pairs are equal.
void enumerate_ansatze(int n, int c, bool nearest_neighbour_only, bool forbid_four_repeats,
                       const std::function<void(const AnsatzSpec&)>& sink);
/// Closed-form count of the same enumeration (run-length recurrence).
std::uint64_t count_ansatze(int alphabet_size, int c, bool forbid_four_repeats);

/// Initial ZYZ on every wire, then per pair a CZ and Y, Z on both wires.
Circuit spec_to_circuit(const AnsatzSpec& spec);

struct SearchConfig {
  int n = 3;
  int c = 14;
  bool nearest_neighbour_only = true;
  bool forbid_four_repeats = true;
  std::uint64_t seed = 0;
  int retries = 2;
  double rel_tol = 1e-8;
  int jobs = 1;
};

struct SearchEntry {
  std::string pairs;
  int rank = 0;
  bool full = false;
};

struct SearchResult {
  std::uint64_t candidates = 0;
  std::uint64_t passing = 0;
  std::vector<SearchEntry> entries;  // sorted by `pairs`
};

/// Per-spec seeds are derived from the master seed and the spec's bit
/// string, so the result is independent of `jobs`.
SearchResult run_search(const SearchConfig& config);
Json search_entry_json(const SearchEntry& e);
std::string search_jsonl(const SearchResult& r);

/// Number of rotation pairs that would fuse into one: same wire, same axis,
/// nothing in between on that wire, where a Z rotation passes through CZ.
int count_mergeable(const Circuit& c);

struct PruneResult {
  Circuit circuit;
  bool reached = false;
  std::vector<int> removed_gates;  // indices into the input circuit
};

/// Greedy removal of rotations from the end backwards. A removal is kept
/// only if the result stays full rank and creates no new mergeable pair.
/// Stops at d = group dimension. On failure the input is returned unchanged.
PruneResult prune_parameters(const Circuit& c, GroupLabel group, std::uint64_t seed, int retries = 2);

/// Removes gate `index` from `c`, renumbering the remaining parameters.
Circuit remove_gate(const Circuit& c, int index);

}  // namespace brickwall
