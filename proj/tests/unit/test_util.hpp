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

#include <cmath>
#include <vector>

#include "brickwall/circuit.hpp"
#include "brickwall/seeding.hpp"

namespace brickwall::testing {

/// Random circuit mixing every gate kind.
inline Circuit random_circuit(int n, int n_gates, Rng& rng, bool with_fixed = true) {
  std::uniform_int_distribution<int> wire(0, n - 1);
  std::uniform_int_distribution<int> kind(0, with_fixed ? 5 : 3);
  std::uniform_int_distribution<int> axis(0, 2);
  std::uniform_int_distribution<int> letter(0, 3);
  CircuitBuilder b(n);
  for (int k = 0; k < n_gates; ++k) {
    const int w = wire(rng);
    int v = wire(rng);
    if (n > 1) {
      while (v == w) v = wire(rng);
    }
    switch (kind(rng)) {
      case 0:
      case 1:
        b.rot(static_cast<Axis>(axis(rng)), w);
        break;
      case 2: {
        std::vector<Pauli> letters(static_cast<std::size_t>(n));
        do {
          for (auto& l : letters) l = static_cast<Pauli>(letter(rng));
        } while (PauliWord(letters).is_identity());
        b.ppr(PauliWord(letters), rng() % 2 ? 1.0 : -0.5);
        break;
      }
      case 3:
        if (n > 1) b.cz(w, v); else b.rot(Axis::X, w);
        break;
      case 4:
        if (n > 1) b.ciy(w, v); else b.rot(Axis::Y, w);
        break;
      default:
        b.clifford(rng() % 2 ? CliffordName::H : CliffordName::S, w);
        break;
    }
  }
  return b.build();
}

inline double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// Central difference of evaluate() along parameter j.
inline ComplexMatrix central_difference(const Circuit& c, std::vector<double> theta, int j, double h) {
  theta[static_cast<std::size_t>(j)] += h;
  const ComplexMatrix plus = evaluate(c, theta);
  theta[static_cast<std::size_t>(j)] -= 2 * h;
  const ComplexMatrix minus = evaluate(c, theta);
  return (plus - minus) / (2 * h);
}

}  // namespace brickwall::testing
