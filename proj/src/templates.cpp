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

#include "brickwall/templates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "brickwall/seeding.hpp"

namespace brickwall {

namespace {

void check_template_qubits(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("templates need 2 <= n <= 6, got " + std::to_string(n));
}

std::vector<RotSlot> brick_rotations(GroupLabel group, int a, int b) {
  switch (group) {
    case GroupLabel::SU: return {{a, Axis::Y}, {a, Axis::Z}, {b, Axis::Y}, {b, Axis::Z}};
    case GroupLabel::SO: return {{a, Axis::Y}, {b, Axis::Y}};
    case GroupLabel::SP: return {{b, Axis::Z}, {b, Axis::Y}, {a, Axis::Y}};
  }
  return {};
}

Brick make_brick(GroupLabel group, int a, int b) {
  Brick br;
  br.entangler = group == GroupLabel::SP ? GateKind::CIY : GateKind::CZ;
  br.a = a;
  br.b = b;
  br.rotations = brick_rotations(group, a, b);
  return br;
}

std::vector<Brick> layer(GroupLabel group, int n) {
  std::vector<Brick> out;
  if (group == GroupLabel::SP) {
    for (int k = 1; k < n; ++k) out.push_back(make_brick(group, k, 0));
    return out;
  }
  for (int a = 0; a + 1 < n; a += 2) out.push_back(make_brick(group, a, a + 1));
  for (int a = 1; a + 1 < n; a += 2) out.push_back(make_brick(group, a, a + 1));
  return out;
}

}  // namespace

int params_per_brick(GroupLabel group) {
  switch (group) {
    case GroupLabel::SU: return 4;
    case GroupLabel::SO: return 2;
    case GroupLabel::SP: return 3;
  }
  return 0;
}

int initial_param_count(GroupLabel group, int n) {
  switch (group) {
    case GroupLabel::SU: return 3 * n;
    case GroupLabel::SO: return n;
    case GroupLabel::SP: return n + 2;
  }
  return 0;
}

int n_layers(GroupLabel group, int n) {
  check_template_qubits(n);
  const long free = group_dimension(group, n) - initial_param_count(group, n);
  return static_cast<int>(free / (static_cast<long>(params_per_brick(group)) * (n - 1)));
}

long lower_bound_two_qubit(GroupLabel group, int n) {
  if (n < 2) throw std::invalid_argument("two-qubit bound needs n >= 2");
  const long free = group_dimension(group, n) - initial_param_count(group, n);
  const long p = params_per_brick(group);
  return (free + p - 1) / p;
}

int TemplateSpec::params_per_brick() const { return brickwall::params_per_brick(group); }

int TemplateSpec::num_bricks() const {
  return n_layers * static_cast<int>(green_block.size()) + static_cast<int>(remainder.size());
}

std::vector<Brick> TemplateSpec::bricks() const {
  std::vector<Brick> out;
  out.reserve(static_cast<std::size_t>(num_bricks()));
  for (int l = 0; l < n_layers; ++l) out.insert(out.end(), green_block.begin(), green_block.end());
  out.insert(out.end(), remainder.begin(), remainder.end());
  return out;
}

TemplateSpec template_spec(GroupLabel group, int n) {
  check_template_qubits(n);
  TemplateSpec spec;
  spec.group = group;
  spec.n = n;
  spec.verified = n >= 3 && n <= 5;
  for (int q = 0; q < n; ++q) {
    const bool zyz = group == GroupLabel::SU || (group == GroupLabel::SP && q == 0);
    if (zyz) {
      spec.initial_layer.push_back({q, Axis::Z});
      spec.initial_layer.push_back({q, Axis::Y});
      spec.initial_layer.push_back({q, Axis::Z});
    } else {
      spec.initial_layer.push_back({q, Axis::Y});
    }
  }
  spec.green_block = layer(group, n);
  spec.n_layers = n_layers(group, n);

  const int p = params_per_brick(group);
  long left = group_dimension(group, n) - initial_param_count(group, n) -
              static_cast<long>(spec.n_layers) * p * static_cast<long>(spec.green_block.size());
  for (std::size_t k = 0; left > 0; k = (k + 1) % spec.green_block.size()) {
    Brick br = spec.green_block[k];
    if (left < p) br.rotations.resize(static_cast<std::size_t>(left));
    left -= static_cast<long>(br.rotations.size());
    spec.remainder.push_back(std::move(br));
  }
  // The SU(8) table keeps one Y rotation per wire on its final CZ.
  if (group == GroupLabel::SU && n == 3) {
    auto& last = spec.remainder.back();
    last.rotations = {{last.a, Axis::Y}, {last.b, Axis::Y}};
  }
  return spec;
}

Circuit realize(const TemplateSpec& spec) { return realize(spec, spec.num_bricks()); }

Circuit realize(const TemplateSpec& spec, int n_bricks) {
  if (n_bricks < 0 || n_bricks > spec.num_bricks()) {
    throw std::invalid_argument("brick count " + std::to_string(n_bricks) + " outside [0, " +
                                std::to_string(spec.num_bricks()) + "]");
  }
  CircuitBuilder b(spec.n);
  for (const auto& r : spec.initial_layer) b.rot(r.axis, r.wire);
  const auto bricks = spec.bricks();
  for (int k = 0; k < n_bricks; ++k) {
    const auto& br = bricks[static_cast<std::size_t>(k)];
    if (br.entangler == GateKind::CIY) {
      b.ciy(br.a, br.b);
    } else {
      b.cz(br.a, br.b);
    }
    for (const auto& r : br.rotations) b.rot(r.axis, r.wire);
  }
  return b.build();
}

Circuit build_template(GroupLabel group, int n) { return realize(template_spec(group, n)); }

Circuit truncated_template(GroupLabel group, int n, int n_bricks) {
  return realize(template_spec(group, n), n_bricks);
}

Circuit build_three_qubit_variant(ThreeQubitVariant v) {
  if (v == ThreeQubitVariant::BrickWall) return build_template(GroupLabel::SU, 3);
  CircuitBuilder b(3);
  for (int q = 0; q < 3; ++q) b.rot(Axis::Z, q).rot(Axis::Y, q).rot(Axis::Z, q);
  auto brick = [&b](int a, int c) { b.cz(a, c).rot(Axis::Y, a).rot(Axis::Z, a).rot(Axis::Y, c).rot(Axis::Z, c); };
  for (int rep = 0; rep < 3; ++rep) {
    brick(0, 1);
    brick(0, 1);
    brick(1, 2);
    brick(1, 2);
  }
  brick(0, 1);
  b.cz(0, 1).rot(Axis::Y, 0).rot(Axis::Y, 1);
  return b.build();
}

Circuit to_ppr(const Circuit& c) {
  const int n = c.num_qubits();
  std::set<std::pair<int, int>> frame;
  std::vector<Gate> out;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CZ: {
        const auto key = std::minmax(g.wires[0], g.wires[1]);
        if (!frame.erase(key)) frame.insert(key);
        break;
      }
      case GateKind::Rot:
      case GateKind::PPR: {
        PhasedPauli p{0, g.kind == GateKind::Rot ? PauliWord::single(n, g.wires[0], axis_pauli(g.axis)) : g.word};
        for (const auto& [a, b] : frame) p = conjugate_by_cz(p, a, b);
        const double base = g.kind == GateKind::Rot ? 0.5 : g.scale;
        out.push_back(Gate::ppr(p.word, g.param, p.phase == 2 ? -base : base));
        break;
      }
      default:
        throw std::invalid_argument("to_ppr accepts only rotation, PPR and CZ gates");
    }
  }
  for (const auto& [a, b] : frame) out.push_back(Gate::cz(a, b));
  return Circuit(n, std::move(out));
}

std::vector<PauliWord> order_pauli_words(int n, PauliOrdering ordering, std::uint64_t seed, int start_index) {
  auto words = nonidentity_words(n);
  switch (ordering) {
    case PauliOrdering::Lexicographic:
      return words;
    case PauliOrdering::Shuffled: {
      Rng rng(seed);
      std::shuffle(words.begin(), words.end(), rng);
      return words;
    }
    case PauliOrdering::GreedyNoncommuting: {
      if (start_index < 0 || start_index >= static_cast<int>(words.size())) {
        throw std::invalid_argument("greedy start index out of range");
      }
      std::vector<bool> used(words.size(), false);
      std::vector<PauliWord> out;
      out.reserve(words.size());
      const std::size_t total = words.size();
      std::size_t cur = static_cast<std::size_t>(start_index);
      while (true) {
        used[cur] = true;
        out.push_back(words[cur]);
        if (out.size() == total) break;
        // Scan cyclically from the current word. Restarting at the top of the
        // list each step clusters low-index words and leaves the n=4 ansatz
        // numerically rank deficient.
        std::size_t next = total;
        std::size_t first_unused = total;
        for (std::size_t step = 1; step < total; ++step) {
          const std::size_t k = (cur + step) % total;
          if (used[k]) continue;
          if (first_unused == total) first_unused = k;
          if (!words[k].commutes_with(words[cur])) {
            next = k;
            break;
          }
        }
        cur = next < total ? next : first_unused;
      }
      return out;
    }
  }
  return words;
}

Circuit lie_algebra_product_ansatz(int n, PauliOrdering ordering, std::uint64_t seed, int start_index) {
  CircuitBuilder b(n);
  for (auto& w : order_pauli_words(n, ordering, seed, start_index)) b.ppr(std::move(w));
  return b.build();
}

Json counts_report(GroupLabel group, int n) {
  const auto spec = template_spec(group, n);
  const auto c = realize(spec);
  return Json{{"group", to_string(group)},
              {"n", n},
              {"params", c.num_params()},
              {"two_qubit", c.entangler_count()},
              {"bound", lower_bound_two_qubit(group, n)},
              {"verified", spec.verified}};
}

}  // namespace brickwall
