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

// In-place gate application on dense column-major matrices. Every routine
// touches O(rows * cols) entries; nothing here allocates.

#include <span>

#include "brickwall/circuit.hpp"

namespace brickwall::detail {

/// Gate matrix restricted to its support, resolved at a concrete angle.
struct LocalGate {
  GateKind kind = GateKind::Rot;
  int n = 0;
  std::uint64_t bit_a = 0;  // single-qubit wire, CZ wire a, CIY target
  std::uint64_t bit_b = 0;  // CZ wire b, CIY control
  Complex u00{1, 0}, u01{0, 0}, u10{0, 0}, u11{1, 0};  // 2x2 block
  PauliMask mask;       // PPR word
  double cos_phi = 1.0;  // PPR: cos(s theta)
  double sin_phi = 0.0;  // PPR: sin(s theta)
};

LocalGate resolve(const Gate& g, int n, std::span<const double> theta);
LocalGate adjoint(const LocalGate& g);

/// M <- G M
void apply_left(const LocalGate& g, ComplexMatrix& m);
void apply_left(const LocalGate& g, ComplexVector& v);
/// M <- M G
void apply_right(const LocalGate& g, ComplexMatrix& m);

/// Gamma = coeff * W, the derivative factor of a parametric gate:
/// d/dtheta G(theta) = Gamma G(theta).
struct Generator {
  PauliMask mask;
  Complex coeff;
};

Generator generator_of(const Gate& g, int n);

/// M <- Gamma M
void apply_generator_left(const Generator& gen, ComplexMatrix& m);
/// tr(Gamma B)
Complex trace_generator_product(const Generator& gen, const ComplexMatrix& b);

}  // namespace brickwall::detail
