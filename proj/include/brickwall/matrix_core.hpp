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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "brickwall/pauli.hpp"

namespace brickwall {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Target groups: SU(2^n), SO(2^n) and the symplectic subgroup Sp*(2^n) of
/// SU(2^n) preserving J = iY (x) I.
enum class GroupLabel { SU, SO, SP };

std::string to_string(GroupLabel g);
/// Accepts "su", "so", "sp" in any case. Throws std::invalid_argument.
GroupLabel parse_group(std::string_view text);

/// Real dimension of the group's Lie algebra.
long group_dimension(GroupLabel g, int n);

inline long hilbert_dim(int n) { return 1L << n; }

/// Kronecker product of single-qubit Paulis, qubit 0 as the leftmost factor.
ComplexMatrix pauli_matrix(const PauliWord& word);

/// (1/dim) tr(A^dagger B). Throws std::invalid_argument on a shape mismatch.
Complex trace_inner_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// J = i Y (x) I_{2^{n-1}}.
ComplexMatrix symplectic_form(int n);

/// Haar-random unitary on U(2^n), phase-corrected into SU(2^n) by dividing by
/// the principal 2^n-th root of its determinant.
ComplexMatrix haar_unitary(int n, std::uint64_t seed);

/// Haar-random element of SO(2^n); imaginary parts are exactly zero.
ComplexMatrix haar_orthogonal(int n, std::uint64_t seed);

/// Random element of Sp*(2^n), built as a product of ten exponentials of
/// random algebra elements. Covers the group with full measure but is not
/// exactly Haar distributed.
ComplexMatrix haar_symplectic(int n, std::uint64_t seed);

/// Dispatches on the group label.
ComplexMatrix random_group_element(GroupLabel g, int n, std::uint64_t seed);

/// True iff `word` generates a one-parameter subgroup exp(-i t word) of the
/// symplectic group.
bool is_symplectic_generator(const PauliWord& word);

/// Number of singular values strictly above rel_tol * sigma_max; 0 for the
/// zero matrix.
int numerical_rank(const RealMatrix& m, double rel_tol = 1e-8);

/// exp(-i t H) for Hermitian H, via eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

/// Max-entry residuals used by membership checks.
double unitarity_residual(const ComplexMatrix& u);
double symplectic_residual(const ComplexMatrix& q);

/// Membership of `u` in the group up to a global phase, at max-entry
/// tolerance `tol`.
bool is_group_member(const ComplexMatrix& u, GroupLabel g, double tol = 1e-8);

/// min over phases phi of max_ij |a - e^{i phi} b|, with phi chosen from the
/// overlap tr(b^dagger a).
double distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace brickwall
