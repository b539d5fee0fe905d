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

#include "brickwall/circuit.hpp"

#include <stdexcept>

#include "brickwall/detail/kernels.hpp"

namespace brickwall {

Pauli axis_pauli(Axis a) {
  switch (a) {
    case Axis::X: return Pauli::X;
    case Axis::Y: return Pauli::Y;
    case Axis::Z: return Pauli::Z;
  }
  return Pauli::I;
}

char axis_char(Axis a) { return pauli_char(axis_pauli(a)); }

Gate Gate::rot(Axis axis, int wire, int param) {
  Gate g;
  g.kind = GateKind::Rot;
  g.axis = axis;
  g.wires = {wire, -1};
  g.param = param;
  return g;
}

Gate Gate::cz(int a, int b) {
  Gate g;
  g.kind = GateKind::CZ;
  g.wires = {a, b};
  return g;
}

Gate Gate::ciy(int control, int target) {
  Gate g;
  g.kind = GateKind::CIY;
  g.wires = {control, target};
  return g;
}

Gate Gate::ppr(PauliWord word, int param, double scale) {
  Gate g;
  g.kind = GateKind::PPR;
  g.wires = {-1, -1};
  g.word = std::move(word);
  g.param = param;
  g.scale = scale;
  return g;
}

Gate Gate::fixed_clifford(CliffordName name, int wire) {
  Gate g;
  g.kind = GateKind::Clifford;
  g.clifford = name;
  g.wires = {wire, -1};
  return g;
}

bool Gate::touches(int wire) const {
  if (kind == GateKind::PPR) return wire < word.size() && word[wire] != Pauli::I;
  return wires[0] == wire || wires[1] == wire;
}

Circuit::Circuit(int n, std::vector<Gate> gates) : n_(n), gates_(std::move(gates)) {
  if (n < 1 || n > 12) throw std::invalid_argument("circuit qubit count out of range");
  int d = 0;
  for (const auto& g : gates_) d += g.is_parametric();
  param_gate_.assign(static_cast<std::size_t>(d), -1);
  auto check_wire = [n](int w) {
    if (w < 0 || w >= n) throw std::invalid_argument("gate wire " + std::to_string(w) + " out of range");
  };
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const auto& g = gates_[k];
    switch (g.kind) {
      case GateKind::Rot:
      case GateKind::Clifford:
        check_wire(g.wires[0]);
        break;
      case GateKind::CZ:
      case GateKind::CIY:
        check_wire(g.wires[0]);
        check_wire(g.wires[1]);
        if (g.wires[0] == g.wires[1]) throw std::invalid_argument("two-qubit gate wires must differ");
        break;
      case GateKind::PPR:
        if (g.word.size() != n) throw std::invalid_argument("PPR word length must equal qubit count");
        break;
    }
    if (g.is_parametric()) {
      if (g.param < 0 || g.param >= d) {
        throw std::invalid_argument("parameter index " + std::to_string(g.param) + " out of range");
      }
      auto& slot = param_gate_[static_cast<std::size_t>(g.param)];
      if (slot != -1) throw std::invalid_argument("parameter index " + std::to_string(g.param) + " used twice");
      slot = static_cast<int>(k);
    }
  }
}

int Circuit::count(GateKind kind) const {
  int c = 0;
  for (const auto& g : gates_) c += g.kind == kind;
  return c;
}

CircuitBuilder& CircuitBuilder::rot(Axis axis, int wire) {
  gates_.push_back(Gate::rot(axis, wire, next_param_++));
  return *this;
}

CircuitBuilder& CircuitBuilder::cz(int a, int b) {
  gates_.push_back(Gate::cz(a, b));
  return *this;
}

CircuitBuilder& CircuitBuilder::ciy(int control, int target) {
  gates_.push_back(Gate::ciy(control, target));
  return *this;
}

CircuitBuilder& CircuitBuilder::ppr(PauliWord word, double scale) {
  gates_.push_back(Gate::ppr(std::move(word), next_param_++, scale));
  return *this;
}

CircuitBuilder& CircuitBuilder::clifford(CliffordName name, int wire) {
  gates_.push_back(Gate::fixed_clifford(name, wire));
  return *this;
}

CircuitBuilder& CircuitBuilder::gate(Gate g) {
  if (g.is_parametric()) g.param = next_param_++;
  gates_.push_back(std::move(g));
  return *this;
}

namespace {

void check_theta(const Circuit& c, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != c.num_params()) {
    throw std::invalid_argument("parameter vector has length " + std::to_string(theta.size()) +
                                ", circuit expects " + std::to_string(c.num_params()));
  }
}

}  // namespace

ComplexMatrix evaluate(const Circuit& c, std::span<const double> theta) {
  check_theta(c, theta);
  ComplexMatrix m = ComplexMatrix::Identity(c.dim(), c.dim());
  for (const auto& g : c.gates()) detail::apply_left(detail::resolve(g, c.num_qubits(), theta), m);
  return m;
}

JacobianStack analytic_jacobian(const Circuit& c, std::span<const double> theta) {
  check_theta(c, theta);
  const int n = c.num_qubits();
  const long dim = c.dim();
  JacobianStack out;
  out.n = n;
  out.slices.resize(static_cast<std::size_t>(c.num_params()));

  // Forward: slice_j <- Gamma_k (G_{k-1} ... G_1).
  ComplexMatrix prefix = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : c.gates()) {
    if (g.is_parametric()) {
      auto& slot = out.slices[static_cast<std::size_t>(g.param)];
      slot = prefix;
      detail::apply_generator_left(detail::generator_of(g, n), slot);
    }
    detail::apply_left(detail::resolve(g, n, theta), prefix);
  }
  out.value = prefix;

  // Backward: suffix = G_m ... G_k, slice_j <- suffix * slice_j.
  ComplexMatrix suffix = ComplexMatrix::Identity(dim, dim);
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    detail::apply_right(detail::resolve(*it, n, theta), suffix);
    if (it->is_parametric()) {
      auto& slot = out.slices[static_cast<std::size_t>(it->param)];
      slot = suffix * slot;
    }
  }
  return out;
}

RealMatrix jacobian_real_matrix(const JacobianStack& stack) {
  const long dim = hilbert_dim(stack.n);
  const long d = static_cast<long>(stack.slices.size());
  RealMatrix m(d, 2 * dim * dim);
  for (long j = 0; j < d; ++j) {
    const auto& s = stack.slices[static_cast<std::size_t>(j)];
    long col = 0;
    for (long r = 0; r < dim; ++r)
      for (long k = 0; k < dim; ++k) m(j, col++) = s(r, k).real();
    for (long r = 0; r < dim; ++r)
      for (long k = 0; k < dim; ++k) m(j, col++) = s(r, k).imag();
  }
  return m;
}

RealMatrix gram_matrix(const Circuit& c, std::span<const double> theta) {
  const auto stack = analytic_jacobian(c, theta);
  const long d = c.num_params();
  RealMatrix g(d, d);
  for (long j = 0; j < d; ++j) {
    for (long k = j; k < d; ++k) {
      const double v = trace_inner_product(stack.slices[static_cast<std::size_t>(j)],
                                           stack.slices[static_cast<std::size_t>(k)])
                           .real();
      g(j, k) = v;
      g(k, j) = v;
    }
  }
  return g;
}

ComplexVector state_evolve(const Circuit& c, std::span<const double> theta, long basis_index) {
  check_theta(c, theta);
  if (basis_index < 0 || basis_index >= c.dim()) throw std::invalid_argument("basis index out of range");
  ComplexVector v = ComplexVector::Zero(c.dim());
  v(basis_index) = 1.0;
  for (const auto& g : c.gates()) detail::apply_left(detail::resolve(g, c.num_qubits(), theta), v);
  return v;
}

}  // namespace brickwall
