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
#include <stdexcept>
#include <tuple>

#include "brickwall/rank_search.hpp"
#include "brickwall/templates.hpp"
#include "test_util.hpp"

namespace brickwall {
namespace {

using testing::max_abs;

struct Golden {
  GroupLabel group;
  int n;
  int params;
  int two_qubit;
};

const Golden kGoldens[] = {
    {GroupLabel::SU, 3, 63, 14},  {GroupLabel::SU, 4, 255, 61},  {GroupLabel::SU, 5, 1023, 252},
    {GroupLabel::SO, 3, 28, 13},  {GroupLabel::SO, 4, 120, 58},  {GroupLabel::SO, 5, 496, 246},
    {GroupLabel::SP, 3, 36, 11},  {GroupLabel::SP, 4, 136, 44},  {GroupLabel::SP, 5, 528, 174},
};

TEST(Templates, TableCounts) {
  for (const auto& g : kGoldens) {
    const auto c = build_template(g.group, g.n);
    SCOPED_TRACE(to_string(g.group) + std::to_string(g.n));
    EXPECT_EQ(c.num_params(), g.params);
    EXPECT_EQ(c.num_params(), group_dimension(g.group, g.n));
    EXPECT_EQ(c.entangler_count(), g.two_qubit);
    EXPECT_EQ(lower_bound_two_qubit(g.group, g.n), g.two_qubit);
    if (g.group == GroupLabel::SP) {
      EXPECT_EQ(c.count(GateKind::CZ), 0);
    } else {
      EXPECT_EQ(c.count(GateKind::CIY), 0);
    }
  }
}

TEST(Templates, LayerCounts) {
  EXPECT_EQ(n_layers(3), 6);
  EXPECT_EQ(n_layers(4), 20);
  EXPECT_EQ(n_layers(5), 63);
  EXPECT_EQ(lower_bound_two_qubit(GroupLabel::SU, 3), 14);
  EXPECT_EQ(lower_bound_two_qubit(GroupLabel::SU, 4), 61);
  EXPECT_EQ(lower_bound_two_qubit(GroupLabel::SP, 3), 11);
  EXPECT_THROW(n_layers(1), std::invalid_argument);
  EXPECT_THROW(lower_bound_two_qubit(GroupLabel::SU, 1), std::invalid_argument);
}

TEST(Templates, SmallAndLargeUseGenericRule) {
  for (auto group : {GroupLabel::SU, GroupLabel::SO, GroupLabel::SP}) {
    for (int n : {2, 6}) {
      const auto spec = template_spec(group, n);
      EXPECT_FALSE(spec.verified);
      EXPECT_EQ(realize(spec).num_params(), group_dimension(group, n));
    }
    for (int n : {3, 4, 5}) EXPECT_TRUE(template_spec(group, n).verified);
    EXPECT_THROW(template_spec(group, 1), std::invalid_argument);
    EXPECT_THROW(template_spec(group, 7), std::invalid_argument);
  }
  const auto su2 = build_template(GroupLabel::SU, 2);
  EXPECT_EQ(su2.num_params(), 15);
  EXPECT_EQ(su2.entangler_count(), 3);
}

TEST(Templates, ThreeQubitLayout) {
  const auto spec = template_spec(GroupLabel::SU, 3);
  ASSERT_EQ(spec.initial_layer.size(), 9u);
  EXPECT_EQ(spec.initial_layer[0], (RotSlot{0, Axis::Z}));
  EXPECT_EQ(spec.initial_layer[1], (RotSlot{0, Axis::Y}));
  EXPECT_EQ(spec.initial_layer[2], (RotSlot{0, Axis::Z}));
  ASSERT_EQ(spec.green_block.size(), 2u);
  EXPECT_EQ(spec.green_block[0].a, 0);
  EXPECT_EQ(spec.green_block[1].a, 1);
  const std::vector<RotSlot> su_rot{{0, Axis::Y}, {0, Axis::Z}, {1, Axis::Y}, {1, Axis::Z}};
  EXPECT_EQ(spec.green_block[0].rotations, su_rot);
  EXPECT_EQ(spec.n_layers, 6);
  ASSERT_EQ(spec.remainder.size(), 2u);
  EXPECT_EQ(spec.remainder[0].rotations.size(), 4u);
  EXPECT_EQ(spec.remainder[1].a, 1);
  EXPECT_EQ(spec.remainder[1].b, 2);
  EXPECT_EQ(spec.remainder[1].rotations, (std::vector<RotSlot>{{1, Axis::Y}, {2, Axis::Y}}));
}

TEST(Templates, FourQubitRemainder) {
  const auto spec = template_spec(GroupLabel::SU, 4);
  ASSERT_EQ(spec.remainder.size(), 1u);
  EXPECT_EQ(spec.remainder[0].a, 0);
  EXPECT_EQ(spec.remainder[0].b, 1);
  EXPECT_EQ(spec.remainder[0].rotations, (std::vector<RotSlot>{{0, Axis::Y}, {0, Axis::Z}, {1, Axis::Y}}));
  const auto even_then_odd = spec.green_block;
  ASSERT_EQ(even_then_odd.size(), 3u);
  EXPECT_EQ(std::tie(even_then_odd[0].a, even_then_odd[0].b), std::make_tuple(0, 1));
  EXPECT_EQ(std::tie(even_then_odd[1].a, even_then_odd[1].b), std::make_tuple(2, 3));
  EXPECT_EQ(std::tie(even_then_odd[2].a, even_then_odd[2].b), std::make_tuple(1, 2));
}

TEST(Templates, SymplecticLayout) {
  const auto spec = template_spec(GroupLabel::SP, 4);
  ASSERT_EQ(spec.initial_layer.size(), 6u);
  ASSERT_EQ(spec.green_block.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    const auto& br = spec.green_block[static_cast<std::size_t>(k)];
    EXPECT_EQ(br.entangler, GateKind::CIY);
    EXPECT_EQ(br.a, k + 1);
    EXPECT_EQ(br.b, 0);
    EXPECT_EQ(br.rotations, (std::vector<RotSlot>{{0, Axis::Z}, {0, Axis::Y}, {k + 1, Axis::Y}}));
  }
}

TEST(Templates, OrthogonalTemplatesAreReal) {
  Rng rng(11);
  for (int n = 2; n <= 4; ++n) {
    const auto c = build_template(GroupLabel::SO, n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = evaluate(c, uniform_angles(c.num_params(), rng));
      EXPECT_LT(u.imag().cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_TRUE(is_group_member(u, GroupLabel::SO));
    }
  }
}

TEST(Templates, SymplecticTemplatesPreserveForm) {
  Rng rng(12);
  for (int n = 2; n <= 4; ++n) {
    const auto c = build_template(GroupLabel::SP, n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = evaluate(c, uniform_angles(c.num_params(), rng));
      EXPECT_LT(symplectic_residual(u), 1e-10);
    }
  }
}

TEST(Templates, Truncation) {
  EXPECT_EQ(truncated_template(GroupLabel::SU, 3, 0).num_params(), 9);
  EXPECT_EQ(truncated_template(GroupLabel::SU, 3, 0).entangler_count(), 0);
  EXPECT_EQ(truncated_template(GroupLabel::SU, 3, 14), build_template(GroupLabel::SU, 3));
  EXPECT_EQ(truncated_template(GroupLabel::SU, 4, 5).num_params(), 12 + 20);
  EXPECT_EQ(truncated_template(GroupLabel::SP, 3, 2).num_params(), 5 + 6);
  EXPECT_THROW(truncated_template(GroupLabel::SU, 3, 15), std::invalid_argument);
  EXPECT_THROW(truncated_template(GroupLabel::SU, 3, -1), std::invalid_argument);
}

TEST(Templates, ThreeQubitVariants) {
  for (auto v : {ThreeQubitVariant::BrickWall, ThreeQubitVariant::Block}) {
    const auto c = build_three_qubit_variant(v);
    EXPECT_EQ(c.num_params(), 63);
    EXPECT_EQ(c.count(GateKind::CZ), 14);
    EXPECT_TRUE(rank_test(c, GroupLabel::SU, 5).full);
  }
  EXPECT_NE(build_three_qubit_variant(ThreeQubitVariant::Block),
            build_three_qubit_variant(ThreeQubitVariant::BrickWall));
}

TEST(Templates, CountsReport) {
  const auto j = counts_report(GroupLabel::SP, 3);
  EXPECT_EQ(j["params"], 36);
  EXPECT_EQ(j["two_qubit"], 11);
  EXPECT_EQ(j["bound"], 11);
  EXPECT_EQ(j["group"], "sp");
  EXPECT_EQ(j["verified"], true);
}

TEST(ToPpr, EmptyCircuit) {
  const auto out = to_ppr(Circuit(3, {}));
  EXPECT_TRUE(out.gates().empty());
  EXPECT_EQ(out.num_qubits(), 3);
}

TEST(ToPpr, SingleBrick) {
  const auto c = CircuitBuilder(2).cz(0, 1).rot(Axis::Y, 0).rot(Axis::Z, 0).rot(Axis::Y, 1).rot(Axis::Z, 1).build();
  const auto p = to_ppr(c);
  EXPECT_EQ(p.num_params(), 4);
  EXPECT_EQ(p.count(GateKind::PPR), 4);
  // Y on wire 0 picks up a Z on wire 1 after the CZ is pushed through.
  EXPECT_EQ(p.gates()[0].word.str(), "YZ");
  EXPECT_EQ(p.gates()[1].word.str(), "ZI");
  EXPECT_EQ(p.gates()[2].word.str(), "ZY");
  EXPECT_EQ(p.gates()[3].word.str(), "IZ");
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto theta = uniform_angles(4, rng);
    EXPECT_LT(distance_up_to_phase(evaluate(p, theta), evaluate(c, theta)), 1e-12);
  }
}

TEST(ToPpr, MatchesTemplateUpToPhase) {
  Rng rng(21);
  const auto c = build_template(GroupLabel::SU, 3);
  const auto p = to_ppr(c);
  EXPECT_EQ(p.num_params(), 63);
  EXPECT_EQ(p.count(GateKind::PPR), 63);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto theta = uniform_angles(63, rng);
    worst = std::max(worst, distance_up_to_phase(evaluate(p, theta), evaluate(c, theta)));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(ToPpr, RandomRotCzCircuits) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = testing::random_circuit(3, 30, rng, false);
    std::vector<Gate> gates;
    for (const auto& g : c.gates())
      if (g.kind != GateKind::CIY) gates.push_back(g);
    CircuitBuilder b(3);
    for (auto& g : gates) b.gate(g);
    const auto src = b.build();
    const auto p = to_ppr(src);
    EXPECT_LE(p.count(GateKind::CZ), 3);
    const auto theta = uniform_angles(src.num_params(), rng);
    EXPECT_LT(distance_up_to_phase(evaluate(p, theta), evaluate(src, theta)), 1e-12);
  }
}

TEST(ToPpr, RejectsCiy) {
  EXPECT_THROW(to_ppr(build_template(GroupLabel::SP, 3)), std::invalid_argument);
  EXPECT_THROW(to_ppr(CircuitBuilder(1).clifford(CliffordName::H, 0).build()), std::invalid_argument);
}

TEST(LieAnsatz, LexicographicOrder) {
  const auto c = lie_algebra_product_ansatz(2, PauliOrdering::Lexicographic);
  ASSERT_EQ(c.num_params(), 15);
  const char* first[] = {"IX", "IY", "IZ", "XI", "XX"};
  for (int k = 0; k < 5; ++k) EXPECT_EQ(c.gates()[static_cast<std::size_t>(k)].word.str(), first[k]);
  EXPECT_EQ(c.gates().back().word.str(), "ZZ");
}

TEST(LieAnsatz, EveryOrderingCoversAllWords) {
  for (int n = 1; n <= 4; ++n) {
    for (auto ord : {PauliOrdering::Lexicographic, PauliOrdering::Shuffled, PauliOrdering::GreedyNoncommuting}) {
      const auto words = order_pauli_words(n, ord, 99, 0);
      std::set<PauliWord> seen(words.begin(), words.end());
      EXPECT_EQ(words.size(), static_cast<std::size_t>(hilbert_dim(n) * hilbert_dim(n) - 1));
      EXPECT_EQ(seen.size(), words.size());
      EXPECT_EQ(seen.count(PauliWord::identity(n)), 0u);
    }
  }
  EXPECT_NE(order_pauli_words(3, PauliOrdering::Shuffled, 1), order_pauli_words(3, PauliOrdering::Shuffled, 2));
  EXPECT_EQ(order_pauli_words(3, PauliOrdering::Shuffled, 1), order_pauli_words(3, PauliOrdering::Shuffled, 1));
}

TEST(LieAnsatz, GreedyOrderAnticommutesWherePossible) {
  for (int start : {0, 7, 100}) {
    const auto words = order_pauli_words(4, PauliOrdering::GreedyNoncommuting, 0, start);
    EXPECT_EQ(words[0], PauliWord::from_index(4, static_cast<std::uint64_t>(start + 1)));
    int commuting = 0;
    for (std::size_t k = 1; k < words.size(); ++k) {
      if (!words[k].commutes_with(words[k - 1])) continue;
      ++commuting;
      // A commuting step is allowed only when no unused word anticommutes.
      for (std::size_t r = k; r < words.size(); ++r) EXPECT_TRUE(words[r].commutes_with(words[k - 1]));
    }
    EXPECT_LT(commuting, 5);
  }
  EXPECT_THROW(order_pauli_words(2, PauliOrdering::GreedyNoncommuting, 0, 15), std::invalid_argument);
}

TEST(LieAnsatz, GreedyFourQubitIsFullRank) {
  for (int start : {0, 254}) {
    const auto c = lie_algebra_product_ansatz(4, PauliOrdering::GreedyNoncommuting, 0, start);
    EXPECT_TRUE(rank_test(c, GroupLabel::SU, 3).full) << "start " << start;
  }
}

TEST(LieAnsatz, LexicographicThreeQubitIsFullRank) {
  EXPECT_TRUE(rank_test(lie_algebra_product_ansatz(3, PauliOrdering::Lexicographic), GroupLabel::SU, 1).full);
}

}  // namespace
}  // namespace brickwall
