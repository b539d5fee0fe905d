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

#include "brickwall/detail/kernels.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace brickwall::detail {

namespace {

std::uint64_t wire_bit(int n, int wire) { return std::uint64_t{1} << (n - 1 - wire); }

// Column-major block of `cols` columns with leading dimension `rows`.
struct View {
  Complex* data;
  long rows;
  long cols;
  Complex& at(long r, long c) const { return data[c * rows + r]; }
};

void left_single(const LocalGate& g, std::uint64_t bit, std::uint64_t require, const View& m) {
  const auto rows = static_cast<std::uint64_t>(m.rows);
  for (long c = 0; c < m.cols; ++c) {
    Complex* col = m.data + c * m.rows;
    for (std::uint64_t i = 0; i < rows; ++i) {
      if ((i & bit) || (i & require) != require) continue;
      const Complex r0 = col[i];
      const Complex r1 = col[i | bit];
      col[i] = g.u00 * r0 + g.u01 * r1;
      col[i | bit] = g.u10 * r0 + g.u11 * r1;
    }
  }
}

void right_single(const LocalGate& g, std::uint64_t bit, std::uint64_t require, const View& m) {
  const auto cols = static_cast<std::uint64_t>(m.cols);
  for (std::uint64_t j = 0; j < cols; ++j) {
    if ((j & bit) || (j & require) != require) continue;
    Complex* c0 = m.data + static_cast<long>(j) * m.rows;
    Complex* c1 = m.data + static_cast<long>(j | bit) * m.rows;
    for (long r = 0; r < m.rows; ++r) {
      const Complex a = c0[r];
      const Complex b = c1[r];
      c0[r] = a * g.u00 + b * g.u10;
      c1[r] = a * g.u01 + b * g.u11;
    }
  }
}

void left_ppr(const LocalGate& g, const View& m) {
  const auto rows = static_cast<std::uint64_t>(m.rows);
  const Complex mis(0, -g.sin_phi);  // -i sin
  const std::uint64_t xm = g.mask.x;
  for (long c = 0; c < m.cols; ++c) {
    Complex* col = m.data + c * m.rows;
    if (xm == 0) {
      for (std::uint64_t y = 0; y < rows; ++y) col[y] *= g.cos_phi + mis * g.mask.column_phase(y);
      continue;
    }
    for (std::uint64_t y = 0; y < rows; ++y) {
      const std::uint64_t x = y ^ xm;
      if (x < y) continue;
      const Complex ry = col[y];
      const Complex rx = col[x];
      // W[y, x] = phase(x), W[x, y] = phase(y)
      col[y] = g.cos_phi * ry + mis * g.mask.column_phase(x) * rx;
      col[x] = g.cos_phi * rx + mis * g.mask.column_phase(y) * ry;
    }
  }
}

void right_ppr(const LocalGate& g, const View& m) {
  const auto cols = static_cast<std::uint64_t>(m.cols);
  const Complex mis(0, -g.sin_phi);
  const std::uint64_t xm = g.mask.x;
  for (std::uint64_t x = 0; x < cols; ++x) {
    Complex* cx = m.data + static_cast<long>(x) * m.rows;
    if (xm == 0) {
      const Complex f = g.cos_phi + mis * g.mask.column_phase(x);
      for (long r = 0; r < m.rows; ++r) cx[r] *= f;
      continue;
    }
    const std::uint64_t y = x ^ xm;
    if (y < x) continue;
    Complex* cy = m.data + static_cast<long>(y) * m.rows;
    // (M G)[:, x] = cos M[:, x] - i sin M[:, y] W[y, x], W[y, x] = phase(x)
    const Complex fx = mis * g.mask.column_phase(x);
    const Complex fy = mis * g.mask.column_phase(y);
    for (long r = 0; r < m.rows; ++r) {
      const Complex a = cx[r];
      const Complex b = cy[r];
      cx[r] = g.cos_phi * a + fx * b;
      cy[r] = g.cos_phi * b + fy * a;
    }
  }
}

void left_cz(const LocalGate& g, const View& m) {
  const std::uint64_t both = g.bit_a | g.bit_b;
  for (long c = 0; c < m.cols; ++c) {
    Complex* col = m.data + c * m.rows;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m.rows); ++i)
      if ((i & both) == both) col[i] = -col[i];
  }
}

void right_cz(const LocalGate& g, const View& m) {
  const std::uint64_t both = g.bit_a | g.bit_b;
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(m.cols); ++j) {
    if ((j & both) != both) continue;
    Complex* col = m.data + static_cast<long>(j) * m.rows;
    for (long r = 0; r < m.rows; ++r) col[r] = -col[r];
  }
}

void apply_left_view(const LocalGate& g, const View& v) {
  switch (g.kind) {
    case GateKind::Rot:
    case GateKind::Clifford: left_single(g, g.bit_a, 0, v); break;
    case GateKind::CIY: left_single(g, g.bit_a, g.bit_b, v); break;
    case GateKind::CZ: left_cz(g, v); break;
    case GateKind::PPR: left_ppr(g, v); break;
  }
}

}  // namespace

LocalGate resolve(const Gate& g, int n, std::span<const double> theta) {
  LocalGate out;
  out.kind = g.kind;
  out.n = n;
  const Complex i(0, 1);
  switch (g.kind) {
    case GateKind::Rot: {
      const double t = theta[static_cast<std::size_t>(g.param)];
      const double c = std::cos(t / 2);
      const double s = std::sin(t / 2);
      out.bit_a = wire_bit(n, g.wires[0]);
      switch (g.axis) {
        case Axis::X: out.u00 = c; out.u01 = -i * s; out.u10 = -i * s; out.u11 = c; break;
        case Axis::Y: out.u00 = c; out.u01 = -s; out.u10 = s; out.u11 = c; break;
        case Axis::Z: out.u00 = std::polar(1.0, -t / 2); out.u01 = 0; out.u10 = 0;
                      out.u11 = std::polar(1.0, t / 2); break;
      }
      break;
    }
    case GateKind::Clifford: {
      out.bit_a = wire_bit(n, g.wires[0]);
      if (g.clifford == CliffordName::H) {
        const double r = std::numbers::sqrt2 / 2;
        out.u00 = r; out.u01 = r; out.u10 = r; out.u11 = -r;
      } else {
        out.u00 = 1; out.u01 = 0; out.u10 = 0; out.u11 = i;
      }
      break;
    }
    case GateKind::CZ:
      out.bit_a = wire_bit(n, g.wires[0]);
      out.bit_b = wire_bit(n, g.wires[1]);
      break;
    case GateKind::CIY:
      out.bit_b = wire_bit(n, g.wires[0]);  // control
      out.bit_a = wire_bit(n, g.wires[1]);  // target
      out.u00 = 0; out.u01 = 1; out.u10 = -1; out.u11 = 0;
      break;
    case GateKind::PPR: {
      const double phi = g.scale * theta[static_cast<std::size_t>(g.param)];
      out.mask = g.word.mask();
      out.cos_phi = std::cos(phi);
      out.sin_phi = std::sin(phi);
      break;
    }
  }
  return out;
}

LocalGate adjoint(const LocalGate& g) {
  LocalGate a = g;
  a.u00 = std::conj(g.u00);
  a.u01 = std::conj(g.u10);
  a.u10 = std::conj(g.u01);
  a.u11 = std::conj(g.u11);
  a.sin_phi = -g.sin_phi;
  return a;
}

void apply_left(const LocalGate& g, ComplexMatrix& m) {
  apply_left_view(g, View{m.data(), m.rows(), m.cols()});
}

void apply_left(const LocalGate& g, ComplexVector& v) {
  apply_left_view(g, View{v.data(), v.size(), 1});
}

void apply_right(const LocalGate& g, ComplexMatrix& m) {
  const View v{m.data(), m.rows(), m.cols()};
  switch (g.kind) {
    case GateKind::Rot:
    case GateKind::Clifford: right_single(g, g.bit_a, 0, v); break;
    case GateKind::CIY: right_single(g, g.bit_a, g.bit_b, v); break;
    case GateKind::CZ: right_cz(g, v); break;
    case GateKind::PPR: right_ppr(g, v); break;
  }
}

Generator generator_of(const Gate& g, int n) {
  if (g.kind == GateKind::Rot) {
    return {PauliWord::single(n, g.wires[0], axis_pauli(g.axis)).mask(), Complex(0, -0.5)};
  }
  if (g.kind == GateKind::PPR) return {g.word.mask(), Complex(0, -g.scale)};
  throw std::invalid_argument("generator_of: gate is not parametric");
}

void apply_generator_left(const Generator& gen, ComplexMatrix& m) {
  const auto rows = static_cast<std::uint64_t>(m.rows());
  const std::uint64_t xm = gen.mask.x;
  for (long c = 0; c < m.cols(); ++c) {
    Complex* col = m.data() + c * m.rows();
    for (std::uint64_t y = 0; y < rows; ++y) {
      const std::uint64_t x = y ^ xm;
      if (x < y) continue;
      if (x == y) {
        col[y] *= gen.coeff * gen.mask.column_phase(y);
        continue;
      }
      const Complex ry = col[y];
      const Complex rx = col[x];
      col[y] = gen.coeff * gen.mask.column_phase(x) * rx;
      col[x] = gen.coeff * gen.mask.column_phase(y) * ry;
    }
  }
}

Complex trace_generator_product(const Generator& gen, const ComplexMatrix& b) {
  // tr(W B) = sum_x phase(x) B[x, x ^ xm]
  Complex acc(0, 0);
  const auto dim = static_cast<std::uint64_t>(b.rows());
  for (std::uint64_t x = 0; x < dim; ++x) {
    acc += gen.mask.column_phase(x) * b(static_cast<long>(x), static_cast<long>(x ^ gen.mask.x));
  }
  return gen.coeff * acc;
}

}  // namespace brickwall::detail
