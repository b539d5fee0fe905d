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

#include "brickwall/matrix_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "brickwall/seeding.hpp"

namespace brickwall {

namespace {

constexpr int kMaxQubits = 6;
constexpr int kSymplecticFactors = 10;

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 6], got " + std::to_string(n));
  }
}

ComplexMatrix complex_ginibre(long dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(dim, dim);
  for (long j = 0; j < dim; ++j)
    for (long i = 0; i < dim; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

}  // namespace

std::string to_string(GroupLabel g) {
  switch (g) {
    case GroupLabel::SU: return "su";
    case GroupLabel::SO: return "so";
    case GroupLabel::SP: return "sp";
  }
  return "?";
}

GroupLabel parse_group(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "su") return GroupLabel::SU;
  if (lower == "so") return GroupLabel::SO;
  if (lower == "sp") return GroupLabel::SP;
  throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected su, so or sp)");
}

long group_dimension(GroupLabel g, int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  const long dim = hilbert_dim(n);
  switch (g) {
    case GroupLabel::SU: return dim * dim - 1;
    case GroupLabel::SO: return dim / 2 * (dim - 1);
    case GroupLabel::SP: return dim / 2 * (dim + 1);
  }
  return 0;
}

ComplexMatrix pauli_matrix(const PauliWord& word) {
  const int n = word.size();
  if (n < 1) throw std::invalid_argument("Pauli word must be non-empty");
  const long dim = hilbert_dim(n);
  const auto mask = word.mask();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (long x = 0; x < dim; ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    m(static_cast<long>(ux ^ mask.x), x) = mask.column_phase(ux);
  }
  return m;
}

Complex trace_inner_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("trace_inner_product: dimension mismatch");
  }
  // tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  return a.conjugate().cwiseProduct(b).sum() / static_cast<double>(a.rows());
}

ComplexMatrix symplectic_form(int n) {
  check_qubits(n);
  ComplexMatrix j = pauli_matrix(PauliWord::single(n, 0, Pauli::Y));
  return Complex(0, 1) * j;
}

ComplexMatrix haar_unitary(int n, std::uint64_t seed) {
  check_qubits(n);
  Rng rng(seed);
  const long dim = hilbert_dim(n);
  ComplexMatrix g = complex_ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (long k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0 ? d / mag : Complex(1, 0);
  }
  const Complex det = q.determinant();
  const Complex root = std::polar(1.0, std::arg(det) / static_cast<double>(dim));
  q /= root;
  return q;
}

ComplexMatrix haar_orthogonal(int n, std::uint64_t seed) {
  check_qubits(n);
  Rng rng(seed);
  const long dim = hilbert_dim(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix g(dim, dim);
  for (long j = 0; j < dim; ++j)
    for (long i = 0; i < dim; ++i) g(i, j) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix& r = qr.matrixQR();
  for (long k = 0; k < dim; ++k) {
    if (r(k, k) < 0) q.col(k) *= -1.0;
  }
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q.cast<Complex>();
}

bool is_symplectic_generator(const PauliWord& word) {
  if (word.is_identity()) return false;
  // exp(-i t P) preserves J = iY (x) I iff P J = -J P^T. With P^T = (-1)^{#Y} P
  // and the first letter commuting with Y only for I and Y, this reduces to a
  // parity rule on the number of Y letters.
  const Pauli first = word[0];
  const bool first_commutes_with_y = first == Pauli::I || first == Pauli::Y;
  const bool y_even = word.y_count() % 2 == 0;
  return first_commutes_with_y ? !y_even : y_even;
}

ComplexMatrix haar_symplectic(int n, std::uint64_t seed) {
  check_qubits(n);
  Rng rng(seed);
  const long dim = hilbert_dim(n);
  std::vector<ComplexMatrix> basis;
  for (const auto& w : nonidentity_words(n)) {
    if (is_symplectic_generator(w)) basis.push_back(pauli_matrix(w));
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix q = ComplexMatrix::Identity(dim, dim);
  for (int f = 0; f < kSymplecticFactors; ++f) {
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (const auto& p : basis) h += normal(rng) * p;
    q = expm_hermitian(h, 1.0) * q;
  }
  return q;
}

ComplexMatrix random_group_element(GroupLabel g, int n, std::uint64_t seed) {
  switch (g) {
    case GroupLabel::SU: return haar_unitary(n, seed);
    case GroupLabel::SO: return haar_orthogonal(n, seed);
    case GroupLabel::SP: return haar_symplectic(n, seed);
  }
  throw std::invalid_argument("unknown group");
}

int numerical_rank(const RealMatrix& m, double rel_tol) {
  if (m.size() == 0) throw std::invalid_argument("numerical_rank: empty matrix");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw std::invalid_argument("numerical_rank: rel_tol must lie in (0, 1)");
  }
  Eigen::BDCSVD<RealMatrix> svd(m);
  if (svd.info() != Eigen::Success) throw std::runtime_error("SVD did not converge");
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rel_tol * s(0);
  int rank = 0;
  for (long i = 0; i < s.size(); ++i) rank += s(i) > cutoff;
  return rank;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const auto& v = es.eigenvectors();
  ComplexVector phases(h.rows());
  for (long k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, -t * es.eigenvalues()(k));
  return v * phases.asDiagonal() * v.adjoint();
}

double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double symplectic_residual(const ComplexMatrix& q) {
  const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(q.rows()))));
  const ComplexMatrix j = symplectic_form(n);
  return (q * j * q.transpose() - j).cwiseAbs().maxCoeff();
}

bool is_group_member(const ComplexMatrix& u, GroupLabel g, double tol) {
  if (u.rows() != u.cols() || u.rows() < 2) return false;
  const long dim = u.rows();
  if ((dim & (dim - 1)) != 0) return false;
  if (unitarity_residual(u) > tol) return false;
  switch (g) {
    case GroupLabel::SU:
      return true;
    case GroupLabel::SO: {
      long bi = 0, bj = 0;
      u.cwiseAbs().maxCoeff(&bi, &bj);
      const double phi = std::arg(u(bi, bj));
      const ComplexMatrix v = std::polar(1.0, -phi) * u;
      if (v.imag().cwiseAbs().maxCoeff() > tol) return false;
      return v.real().determinant() > 0;
    }
    case GroupLabel::SP: {
      const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(dim))));
      const ComplexMatrix j = symplectic_form(n);
      const ComplexMatrix m = u * j * u.transpose();
      const Complex lambda = trace_inner_product(j, m);
      if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
      return (m - lambda * j).cwiseAbs().maxCoeff() <= tol;
    }
  }
  return false;
}

double distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("distance_up_to_phase: dimension mismatch");
  }
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1, 0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace brickwall
