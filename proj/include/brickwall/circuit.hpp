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

#include <array>
#include <span>
#include <string>
#include <vector>

#include "brickwall/matrix_core.hpp"
#include "brickwall/pauli.hpp"

namespace brickwall {

enum class GateKind { Rot, CZ, CIY, PPR, Clifford };
enum class Axis { X, Y, Z };
enum class CliffordName { H, S };

Pauli axis_pauli(Axis a);
char axis_char(Axis a);

/// One circuit element.
///
///   Rot(P, w, j):  exp(-i theta_j P / 2) on wire w
///   CZ(a, b):      controlled-Z, symmetric in its wires
///   CIY(c, t):     I on the control-0 branch, iY on target for control 1;
///                  equals (S on c) followed by controlled-Y
///   PPR(W, j, s):  exp(-i s theta_j W)
///   Clifford:      fixed H or S on one wire
struct Gate {
  GateKind kind = GateKind::Rot;
  Axis axis = Axis::Z;
  CliffordName clifford = CliffordName::H;
  std::array<int, 2> wires{0, -1};
  PauliWord word;
  double scale = 1.0;
  int param = -1;

  static Gate rot(Axis axis, int wire, int param);
  static Gate cz(int a, int b);
  static Gate ciy(int control, int target);
  static Gate ppr(PauliWord word, int param, double scale = 1.0);
  static Gate fixed_clifford(CliffordName name, int wire);

  bool is_parametric() const { return kind == GateKind::Rot || kind == GateKind::PPR; }
  bool is_entangler() const { return kind == GateKind::CZ || kind == GateKind::CIY; }
  bool touches(int wire) const;

  bool operator==(const Gate&) const = default;
};

/// Parametrized circuit F: T^d -> U(2^n). Gates are stored in circuit order
/// (first applied first); each parameter feeds exactly one gate.
class Circuit {
 public:
  Circuit() = default;
  /// Throws std::invalid_argument if a wire is out of range, wires of a
  /// two-qubit gate coincide, a PPR word has the wrong length, or parameter
  /// indices are not a permutation of [0, d).
  Circuit(int n, std::vector<Gate> gates);

  int num_qubits() const { return n_; }
  int num_params() const { return static_cast<int>(param_gate_.size()); }
  long dim() const { return hilbert_dim(n_); }
  const std::vector<Gate>& gates() const { return gates_; }
  /// Index into gates() of the gate fed by parameter j.
  int gate_of_param(int j) const { return param_gate_[static_cast<std::size_t>(j)]; }

  int count(GateKind kind) const;
  int entangler_count() const { return count(GateKind::CZ) + count(GateKind::CIY); }

  bool operator==(const Circuit& other) const { return n_ == other.n_ && gates_ == other.gates_; }

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
  std::vector<int> param_gate_;
};

/// Appends gates in circuit order, assigning parameter indices sequentially.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int n) : n_(n) {}

  CircuitBuilder& rot(Axis axis, int wire);
  CircuitBuilder& cz(int a, int b);
  CircuitBuilder& ciy(int control, int target);
  CircuitBuilder& ppr(PauliWord word, double scale = 1.0);
  CircuitBuilder& clifford(CliffordName name, int wire);
  CircuitBuilder& gate(Gate g);

  int num_params() const { return next_param_; }
  Circuit build() const { return Circuit(n_, gates_); }

 private:
  int n_;
  int next_param_ = 0;
  std::vector<Gate> gates_;
};

/// Partial derivatives dF/dtheta_j at a fixed theta, plus F(theta) itself.
struct JacobianStack {
  int n = 0;
  ComplexMatrix value;
  std::vector<ComplexMatrix> slices;
};

/// F(theta) = G_m ... G_2 G_1 for gates G_1..G_m in circuit order.
/// Throws std::invalid_argument if theta.size() != num_params().
ComplexMatrix evaluate(const Circuit& c, std::span<const double> theta);

/// Slice j = (G_m ... G_k) Gamma_k (G_{k-1} ... G_1) where gate k carries
/// parameter j and Gamma_k is its generator (-i P / 2 for Rot, -i s W for
/// PPR). One prefix sweep, one suffix sweep.
JacobianStack analytic_jacobian(const Circuit& c, std::span<const double> theta);

/// d x 2*4^n real matrix; row j holds the real parts of slice j in row-major
/// order followed by the imaginary parts.
RealMatrix jacobian_real_matrix(const JacobianStack& stack);

/// G_jk = Re[(1/2^n) tr(dF/dtheta_j^dagger dF/dtheta_k)].
RealMatrix gram_matrix(const Circuit& c, std::span<const double> theta);

/// F(theta) e_k.
ComplexVector state_evolve(const Circuit& c, std::span<const double> theta, long basis_index);

}  // namespace brickwall
