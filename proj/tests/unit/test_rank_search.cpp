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

#include <gtest/gtest.h>

#include <set>

#include "brickwall/rank_search.hpp"
#include "brickwall/templates.hpp"
#include "test_util.hpp"

namespace brickwall {
namespace {

AnsatzSpec brick_wall_spec() {
  AnsatzSpec s;
  s.n = 3;
  for (int k = 0; k < 7; ++k) {
    s.pairs.emplace_back(0, 1);
    s.pairs.emplace_back(1, 2);
  }
  return s;
}

bool has_four_run(const AnsatzSpec& s) {
  for (std::size_t k = 3; k < s.pairs.size(); ++k) {
    if (s.pairs[k] == s.pairs[k - 1] && s.pairs[k] == s.pairs[k - 2] && s.pairs[k] == s.pairs[k - 3]) return true;
  }
  return false;
}

// Counts sequences over `a` letters with no run of four by plain enumeration.
std::uint64_t brute_count(int a, int c, bool forbid) {
  std::uint64_t total = 1;
  for (int k = 0; k < c; ++k) total *= static_cast<std::uint64_t>(a);
  std::uint64_t ok = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> seq;
    std::uint64_t x = code;
    for (int k = 0; k < c; ++k) {
      seq.push_back(static_cast<int>(x % static_cast<std::uint64_t>(a)));
      x /= static_cast<std::uint64_t>(a);
    }
    bool bad = false;
    for (int k = 3; forbid && k < c; ++k) bad |= seq[k] == seq[k - 1] && seq[k] == seq[k - 2] && seq[k] == seq[k - 3];
    ok += !bad;
  }
  return ok;
}

TEST(RankTest, TemplateGoldens) {
  const auto su = rank_test(build_template(GroupLabel::SU, 3), GroupLabel::SU, 1);
  EXPECT_EQ(su.rank, 63);
  EXPECT_TRUE(su.full);
  EXPECT_EQ(su.target, 63);
  EXPECT_EQ(su.theta.size(), 63u);
  const auto so = rank_test(build_template(GroupLabel::SO, 3), GroupLabel::SO, 1);
  EXPECT_EQ(so.rank, 28);
  EXPECT_TRUE(so.full);
  const auto sp = rank_test(build_template(GroupLabel::SP, 3), GroupLabel::SP, 1);
  EXPECT_EQ(sp.rank, 36);
  EXPECT_TRUE(sp.full);
}

TEST(RankTest, PartialCircuitIsNotFull) {
  const auto r = rank_test(truncated_template(GroupLabel::SU, 3, 0), GroupLabel::SU, 2);
  EXPECT_EQ(r.rank, 9);
  EXPECT_FALSE(r.full);
  EXPECT_EQ(r.samples, 3);
}

TEST(RankTest, DeterministicForSeed) {
  const auto c = build_template(GroupLabel::SU, 3);
  EXPECT_EQ(rank_test(c, GroupLabel::SU, 9).theta, rank_test(c, GroupLabel::SU, 9).theta);
  EXPECT_NE(rank_test(c, GroupLabel::SU, 9).theta, rank_test(c, GroupLabel::SU, 10).theta);
}

TEST(RankTest, FullRankAlmostEverywhere) {
  Rng rng(77);
  for (auto group : {GroupLabel::SU, GroupLabel::SO, GroupLabel::SP}) {
    const auto c = build_template(group, 3);
    ASSERT_TRUE(rank_test(c, group, 3).full);
    const long target = group_dimension(group, 3);
    for (int trial = 0; trial < 100; ++trial) EXPECT_EQ(jacobian_rank(c, uniform_angles(c.num_params(), rng)), target);
  }
}

TEST(Enumerate, ClosedFormCounts) {
  EXPECT_EQ(count_ansatze(2, 14, false), 16384u);
  EXPECT_EQ(count_ansatze(2, 14, true), 6272u);
  EXPECT_EQ(count_ansatze(3, 14, false), 4782969u);
  EXPECT_EQ(count_ansatze(2, 0, true), 1u);
  for (int a = 1; a <= 3; ++a) {
    for (int c = 0; c <= 9; ++c) {
      EXPECT_EQ(count_ansatze(a, c, true), brute_count(a, c, true)) << a << " " << c;
      EXPECT_EQ(count_ansatze(a, c, false), brute_count(a, c, false)) << a << " " << c;
    }
  }
}

TEST(Enumerate, StreamMatchesCountsAndFilter) {
  std::uint64_t n_filtered = 0;
  std::set<std::string> seen;
  const auto alphabet = pair_alphabet(3, true);
  enumerate_ansatze(3, 14, true, true, [&](const AnsatzSpec& s) {
    ++n_filtered;
    EXPECT_EQ(s.pairs.size(), 14u);
    EXPECT_FALSE(has_four_run(s));
    seen.insert(s.bits(alphabet));
  });
  EXPECT_EQ(n_filtered, 6272u);
  EXPECT_EQ(seen.size(), 6272u);
  EXPECT_EQ(seen.count("00000000000000"), 0u);

  std::uint64_t n_all = 0;
  enumerate_ansatze(3, 14, true, false, [&](const AnsatzSpec&) { ++n_all; });
  EXPECT_EQ(n_all, 16384u);

  std::uint64_t n_full = 0;
  enumerate_ansatze(3, 6, false, true, [&](const AnsatzSpec& s) {
    ++n_full;
    for (const auto& [a, b] : s.pairs) EXPECT_LT(a, b);
  });
  EXPECT_EQ(n_full, count_ansatze(3, 6, true));
}

TEST(Enumerate, PairAlphabet) {
  EXPECT_EQ(pair_alphabet(3, true), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(pair_alphabet(3, false), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(pair_alphabet(4, false).size(), 6u);
}

TEST(SpecToCircuit, ParameterCounts) {
  AnsatzSpec empty;
  empty.n = 3;
  EXPECT_EQ(spec_to_circuit(empty).num_params(), 9);
  const auto bw = spec_to_circuit(brick_wall_spec());
  EXPECT_EQ(bw.num_params(), 65);
  EXPECT_EQ(bw.count(GateKind::CZ), 14);
  EXPECT_EQ(brick_wall_spec().bits(pair_alphabet(3, true)), "01010101010101");
  EXPECT_TRUE(rank_test(bw, GroupLabel::SU, 4).full);
}

TEST(SpecToCircuit, BrickWallMatchesTemplatePrefix) {
  // The template is the brick wall candidate with its last two rotations
  // removed, so the gates agree up to that point.
  const auto bw = spec_to_circuit(brick_wall_spec());
  const auto t = build_template(GroupLabel::SU, 3);
  ASSERT_EQ(bw.gates().size(), t.gates().size() + 2);
  for (std::size_t k = 0; k + 3 < t.gates().size(); ++k) EXPECT_EQ(bw.gates()[k], t.gates()[k]);
}

TEST(SpecToCircuit, ReversalPreservesFullRank) {
  const auto alphabet = pair_alphabet(3, true);
  int idx = 0;
  int checked = 0;
  enumerate_ansatze(3, 14, true, true, [&](const AnsatzSpec& s) {
    if (idx++ % 157 != 0) return;
    const auto fwd = rank_test(spec_to_circuit(s), GroupLabel::SU, 1);
    const auto rev = rank_test(spec_to_circuit(s.reversed()), GroupLabel::SU, 1);
    EXPECT_EQ(fwd.full, rev.full) << s.bits(alphabet);
    EXPECT_EQ(s.reversed().reversed().pairs, s.pairs);
    ++checked;
  });
  EXPECT_EQ(checked, 40);
}

TEST(Search, DeterministicAcrossJobCounts) {
  SearchConfig cfg;
  cfg.c = 8;
  cfg.seed = 5;
  const auto serial = run_search(cfg);
  cfg.jobs = 3;
  const auto parallel = run_search(cfg);
  EXPECT_EQ(serial.candidates, count_ansatze(2, 8, true));
  EXPECT_EQ(serial.entries.size(), serial.candidates);
  EXPECT_EQ(serial.passing, 0u);  // 41 parameters cannot span su(8)
  ASSERT_EQ(parallel.entries.size(), serial.entries.size());
  for (std::size_t k = 0; k < serial.entries.size(); ++k) {
    EXPECT_EQ(parallel.entries[k].pairs, serial.entries[k].pairs);
    EXPECT_EQ(parallel.entries[k].rank, serial.entries[k].rank);
  }
  EXPECT_TRUE(std::is_sorted(serial.entries.begin(), serial.entries.end(),
                             [](const SearchEntry& a, const SearchEntry& b) { return a.pairs < b.pairs; }));
  const auto line = search_entry_json(serial.entries.front());
  EXPECT_EQ(line["pairs"], serial.entries.front().pairs);
  EXPECT_EQ(line["full"], false);
  const auto jsonl = search_jsonl(serial);
  EXPECT_EQ(static_cast<std::uint64_t>(std::count(jsonl.begin(), jsonl.end(), '\n')), serial.candidates);
}

TEST(Prune, MergeDetection) {
  EXPECT_EQ(count_mergeable(CircuitBuilder(1).rot(Axis::Z, 0).rot(Axis::Y, 0).rot(Axis::Z, 0).build()), 0);
  EXPECT_EQ(count_mergeable(CircuitBuilder(1).rot(Axis::Z, 0).rot(Axis::Z, 0).build()), 1);
  EXPECT_EQ(count_mergeable(CircuitBuilder(2).rot(Axis::Z, 0).cz(0, 1).rot(Axis::Z, 0).build()), 1);
  EXPECT_EQ(count_mergeable(CircuitBuilder(2).rot(Axis::Y, 0).cz(0, 1).rot(Axis::Y, 0).build()), 0);
  EXPECT_EQ(count_mergeable(CircuitBuilder(2).rot(Axis::Y, 0).rot(Axis::Y, 1).rot(Axis::Y, 0).build()), 1);
  const auto zyz = CircuitBuilder(1).rot(Axis::Z, 0).rot(Axis::Y, 0).rot(Axis::Z, 0).build();
  const auto removed = remove_gate(zyz, 1);
  EXPECT_EQ(removed.num_params(), 2);
  EXPECT_EQ(removed.gates()[1].param, 1);
  EXPECT_EQ(count_mergeable(removed), 1);
}

TEST(Prune, BrickWallCandidateDropsTwo) {
  const auto bw = spec_to_circuit(brick_wall_spec());
  const auto r = prune_parameters(bw, GroupLabel::SU, 3);
  ASSERT_TRUE(r.reached);
  EXPECT_EQ(r.circuit.num_params(), 63);
  EXPECT_EQ(r.removed_gates.size(), 2u);
  EXPECT_TRUE(rank_test(r.circuit, GroupLabel::SU, 8).full);
  EXPECT_LE(count_mergeable(r.circuit), count_mergeable(bw));
}

TEST(Prune, NoOpAtTarget) {
  const auto t = build_template(GroupLabel::SU, 3);
  const auto r = prune_parameters(t, GroupLabel::SU, 3);
  EXPECT_TRUE(r.reached);
  EXPECT_EQ(r.circuit, t);
  EXPECT_TRUE(r.removed_gates.empty());
}

TEST(Prune, NeverIntroducesMerges) {
  // Removing an interior Y of a ZYZ run fuses the two Z rotations; the
  // pruner has to pick a removal elsewhere.
  const auto bw = spec_to_circuit(brick_wall_spec());
  EXPECT_GT(count_mergeable(remove_gate(bw, 1)), count_mergeable(bw));
  const auto r = prune_parameters(bw, GroupLabel::SU, 11);
  ASSERT_TRUE(r.reached);
  for (int g : r.removed_gates) EXPECT_TRUE(bw.gates()[static_cast<std::size_t>(g)].is_parametric());
  EXPECT_EQ(count_mergeable(r.circuit), count_mergeable(bw));

  const auto c = CircuitBuilder(1).rot(Axis::Z, 0).rot(Axis::Y, 0).rot(Axis::Z, 0).rot(Axis::X, 0).build();
  const auto s = prune_parameters(c, GroupLabel::SU, 1);
  ASSERT_TRUE(s.reached);
  EXPECT_EQ(s.removed_gates, std::vector<int>{3});
}

TEST(Prune, ReportsFailureUnchanged) {
  const auto c = CircuitBuilder(1).rot(Axis::Z, 0).rot(Axis::Z, 0).rot(Axis::Z, 0).rot(Axis::Z, 0).build();
  const auto r = prune_parameters(c, GroupLabel::SU, 1);
  EXPECT_FALSE(r.reached);
  EXPECT_EQ(r.circuit, c);
}

}  // namespace
}  // namespace brickwall
