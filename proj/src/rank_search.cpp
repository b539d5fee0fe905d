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

#include "brickwall/rank_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "brickwall/parallel.hpp"
#include "brickwall/seeding.hpp"

namespace brickwall {

int jacobian_rank(const Circuit& c, std::span<const double> theta, double rel_tol) {
  if (c.num_params() == 0) return 0;
  return numerical_rank(jacobian_real_matrix(analytic_jacobian(c, theta)), rel_tol);
}

RankReport rank_test(const Circuit& c, GroupLabel group, std::uint64_t seed, int retries, double rel_tol) {
  if (retries < 0) throw std::invalid_argument("retries must be non-negative");
  RankReport report;
  report.target = group_dimension(group, c.num_qubits());
  report.rel_tol = rel_tol;
  report.rank = -1;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(attempt)}));
    auto theta = uniform_angles(c.num_params(), rng);
    const int r = jacobian_rank(c, theta, rel_tol);
    ++report.samples;
    if (r > report.rank) {
      report.rank = r;
      report.theta = std::move(theta);
    }
    if (report.rank >= report.target) break;
  }
  report.full = report.rank == report.target;
  return report;
}

std::string AnsatzSpec::bits(const std::vector<std::pair<int, int>>& alphabet) const {
  std::string out;
  out.reserve(pairs.size());
  for (auto p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
    const auto it = std::find(alphabet.begin(), alphabet.end(), p);
    if (it == alphabet.end()) throw std::invalid_argument("pair not in alphabet");
    out.push_back(static_cast<char>('0' + (it - alphabet.begin())));
  }
  return out;
}

AnsatzSpec AnsatzSpec::reversed() const {
  AnsatzSpec r = *this;
  std::reverse(r.pairs.begin(), r.pairs.end());
  return r;
}

std::vector<std::pair<int, int>> pair_alphabet(int n, bool nearest_neighbour_only) {
  if (n < 2) throw std::invalid_argument("pair alphabet needs n >= 2");
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!nearest_neighbour_only || b == a + 1) out.emplace_back(a, b);
  return out;
}

namespace {

constexpr int kMaxRun = 3;

void enumerate_rec(const std::vector<std::pair<int, int>>& alphabet, int c, bool forbid, int run,
                   AnsatzSpec& spec, const std::function<void(const AnsatzSpec&)>& sink) {
  if (static_cast<int>(spec.pairs.size()) == c) {
    sink(spec);
    return;
  }
  for (const auto& p : alphabet) {
    const bool same = !spec.pairs.empty() && spec.pairs.back() == p;
    const int next_run = same ? run + 1 : 1;
    if (forbid && next_run > kMaxRun) continue;
    spec.pairs.push_back(p);
    enumerate_rec(alphabet, c, forbid, next_run, spec, sink);
    spec.pairs.pop_back();
  }
}

}  // namespace

void enumerate_ansatze(int n, int c, bool nearest_neighbour_only, bool forbid_four_repeats,
                       const std::function<void(const AnsatzSpec&)>& sink) {
  if (c < 0) throw std::invalid_argument("pair count must be non-negative");
  const auto alphabet = pair_alphabet(n, nearest_neighbour_only);
  AnsatzSpec spec;
  spec.n = n;
  enumerate_rec(alphabet, c, forbid_four_repeats, 0, spec, sink);
}

std::uint64_t count_ansatze(int alphabet_size, int c, bool forbid_four_repeats) {
  if (alphabet_size < 1 || c < 0) throw std::invalid_argument("invalid enumeration size");
  if (c == 0) return 1;
  const int max_run = forbid_four_repeats ? kMaxRun : c;
  // runs[r] = sequences whose final run has length r + 1
  std::vector<std::uint64_t> runs(static_cast<std::size_t>(max_run), 0);
  runs[0] = static_cast<std::uint64_t>(alphabet_size);
  for (int len = 1; len < c; ++len) {
    std::uint64_t total = 0;
    for (auto v : runs) total += v;
    std::vector<std::uint64_t> next(runs.size(), 0);
    next[0] = total * static_cast<std::uint64_t>(alphabet_size - 1);
    for (std::size_t r = 0; r + 1 < runs.size(); ++r) next[r + 1] = runs[r];
    runs = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : runs) total += v;
  return total;
}

Circuit spec_to_circuit(const AnsatzSpec& spec) {
  CircuitBuilder b(spec.n);
  for (int q = 0; q < spec.n; ++q) b.rot(Axis::Z, q).rot(Axis::Y, q).rot(Axis::Z, q);
  for (const auto& [a, c] : spec.pairs) {
    b.cz(a, c).rot(Axis::Y, a).rot(Axis::Z, a).rot(Axis::Y, c).rot(Axis::Z, c);
  }
  return b.build();
}

SearchResult run_search(const SearchConfig& config) {
  const auto alphabet = pair_alphabet(config.n, config.nearest_neighbour_only);
  std::vector<AnsatzSpec> specs;
  enumerate_ansatze(config.n, config.c, config.nearest_neighbour_only, config.forbid_four_repeats,
                    [&specs](const AnsatzSpec& s) { specs.push_back(s); });
  SearchResult result;
  result.candidates = specs.size();
  result.entries.resize(specs.size());
  parallel_for(specs.size(), config.jobs, [&](std::size_t i) {
    auto& e = result.entries[i];
    e.pairs = specs[i].bits(alphabet);
    const auto report = rank_test(spec_to_circuit(specs[i]), GroupLabel::SU,
                                  derive_seed(config.seed, {hash_string(e.pairs)}), config.retries,
                                  config.rel_tol);
    e.rank = report.rank;
    e.full = report.full;
  });
  std::sort(result.entries.begin(), result.entries.end(),
            [](const SearchEntry& a, const SearchEntry& b) { return a.pairs < b.pairs; });
  for (const auto& e : result.entries) result.passing += e.full;
  return result;
}

Json search_entry_json(const SearchEntry& e) {
  return Json{{"pairs", e.pairs}, {"rank", e.rank}, {"full", e.full}};
}

std::string search_jsonl(const SearchResult& r) {
  std::string out;
  for (const auto& e : r.entries) {
    out += search_entry_json(e).dump();
    out += '\n';
  }
  return out;
}

int count_mergeable(const Circuit& c) {
  const auto& gates = c.gates();
  int merges = 0;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const auto& g = gates[k];
    if (g.kind != GateKind::Rot) continue;
    const int w = g.wires[0];
    for (std::size_t j = k + 1; j < gates.size(); ++j) {
      const auto& h = gates[j];
      if (!h.touches(w)) continue;
      if (h.kind == GateKind::CZ && g.axis == Axis::Z) continue;
      merges += h.kind == GateKind::Rot && h.axis == g.axis;
      break;
    }
  }
  return merges;
}

Circuit remove_gate(const Circuit& c, int index) {
  if (index < 0 || index >= static_cast<int>(c.gates().size())) throw std::invalid_argument("gate index out of range");
  std::vector<Gate> gates;
  const int dropped = c.gates()[static_cast<std::size_t>(index)].param;
  for (int k = 0; k < static_cast<int>(c.gates().size()); ++k) {
    if (k == index) continue;
    Gate g = c.gates()[static_cast<std::size_t>(k)];
    if (g.is_parametric() && dropped >= 0 && g.param > dropped) --g.param;
    gates.push_back(std::move(g));
  }
  return Circuit(c.num_qubits(), std::move(gates));
}

PruneResult prune_parameters(const Circuit& c, GroupLabel group, std::uint64_t seed, int retries) {
  const long target = group_dimension(group, c.num_qubits());
  PruneResult result{c, c.num_params() == target, {}};
  if (result.reached) return result;
  if (c.num_params() < target) return result;

  Circuit cur = c;
  std::vector<int> origin(c.gates().size());
  for (std::size_t k = 0; k < origin.size(); ++k) origin[k] = static_cast<int>(k);
  std::vector<int> removed;
  std::uint64_t trial = 0;
  while (cur.num_params() > target) {
    const int merges = count_mergeable(cur);
    bool progressed = false;
    for (int k = static_cast<int>(cur.gates().size()) - 1; k >= 0 && !progressed; --k) {
      if (!cur.gates()[static_cast<std::size_t>(k)].is_parametric()) continue;
      Circuit candidate = remove_gate(cur, k);
      if (count_mergeable(candidate) > merges) continue;
      if (!rank_test(candidate, group, derive_seed(seed, {trial++}), retries).full) continue;
      removed.push_back(origin[static_cast<std::size_t>(k)]);
      origin.erase(origin.begin() + k);
      cur = std::move(candidate);
      progressed = true;
    }
    if (!progressed) return result;
  }
  result.circuit = std::move(cur);
  result.reached = true;
  result.removed_gates = std::move(removed);
  return result;
}

}  // namespace brickwall
