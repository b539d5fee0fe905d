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
#include <utility>
#include <vector>

#include "brickwall/circuit.hpp"
#include "brickwall/matrix_io.hpp"

namespace brickwall {

/// A single-qubit rotation slot: wire plus axis.
struct RotSlot {
  int wire = 0;
  Axis axis = Axis::Z;
  bool operator==(const RotSlot&) const = default;
};

/// Entangler followed by rotations. For CIY, `a` is the control and `b` the
/// target (always qubit 0 in symplectic templates).
struct Brick {
  GateKind entangler = GateKind::CZ;
  int a = 0;
  int b = 1;
  std::vector<RotSlot> rotations;
  bool operator==(const Brick&) const = default;
};

struct TemplateSpec {
  GroupLabel group = GroupLabel::SU;
  int n = 0;
  std::vector<RotSlot> initial_layer;
  /// One green block: the bricks of a single layer.
  std::vector<Brick> green_block;
  int n_layers = 0;
  /// Bricks appended after the repeated layers, rotations already truncated.
  std::vector<Brick> remainder;
  /// False when the layout comes from the generic packing rule rather than a
  /// checked table (n outside 3..5).
  bool verified = false;

  int params_per_brick() const;
  int num_bricks() const;
  /// All bricks in circuit order: layers then remainder.
  std::vector<Brick> bricks() const;
};

/// floor((d - n_initial) / (p (n - 1))) with the group's d, n_initial and p.
/// For SU this is floor((4^n - 1 - 3n) / (4 (n - 1))).
int n_layers(GroupLabel group, int n);
inline int n_layers(int n) { return n_layers(GroupLabel::SU, n); }

int initial_param_count(GroupLabel group, int n);
int params_per_brick(GroupLabel group);
/// ceil((d - n_initial) / p).
long lower_bound_two_qubit(GroupLabel group, int n);

/// Throws std::invalid_argument for n outside [2, 6].
TemplateSpec template_spec(GroupLabel group, int n);
Circuit realize(const TemplateSpec& spec);
/// Initial layer plus the first `n_bricks` bricks of the full layout.
Circuit realize(const TemplateSpec& spec, int n_bricks);

Circuit build_template(GroupLabel group, int n);
Circuit truncated_template(GroupLabel group, int n, int n_bricks);

enum class ThreeQubitVariant { BrickWall, Block };
/// The two 63-parameter, 14-CZ layouts for SU(8).
Circuit build_three_qubit_variant(ThreeQubitVariant v);

/// Moves every CZ to the end of the circuit by conjugating the rotations it
/// passes, turning each rotation into a PPR with scale +-1/2 so that angles
/// map 1-to-1. CZ pairs applied an odd number of times survive as a trailing
/// Clifford frame; even ones cancel. Accepts Rot, PPR and CZ gates only;
/// throws std::invalid_argument otherwise.
Circuit to_ppr(const Circuit& c);

enum class PauliOrdering { Lexicographic, Shuffled, GreedyNoncommuting };

/// One PPR exp(-i theta_P P) per non-identity word. `seed` is used by
/// Shuffled, `start_index` by GreedyNoncommuting.
Circuit lie_algebra_product_ansatz(int n, PauliOrdering ordering, std::uint64_t seed = 0,
                                   int start_index = 0);
std::vector<PauliWord> order_pauli_words(int n, PauliOrdering ordering, std::uint64_t seed = 0,
                                         int start_index = 0);

/// {"group","n","params","two_qubit","bound","verified"}
Json counts_report(GroupLabel group, int n);

}  // namespace brickwall
