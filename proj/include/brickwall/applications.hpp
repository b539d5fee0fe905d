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

#include <string>
#include <vector>

#include "brickwall/matrix_io.hpp"
#include "brickwall/synthesis.hpp"

namespace brickwall {

struct PauliTerm {
  double coeff = 0.0;
  PauliWord word;
};

class PauliSum {
 public:
  explicit PauliSum(int n) : n_(n) {}

  /// Adds `coeff * word`, merging with an existing term on the same word.
  void add(double coeff, const PauliWord& word);
  int num_qubits() const { return n_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  ComplexMatrix matrix() const;

 private:
  int n_;
  std::vector<PauliTerm> terms_;
};

/// sum_j Z_j + sum_j X_j X_{j+1}.
PauliSum ising_hamiltonian(int n);

/// exp(-i t H) through a dense eigendecomposition.
ComplexMatrix matrix_exponential_hermitian(const PauliSum& h, double t);

/// angle * sign * word; sign lets "-YXI" style words be expressed.
struct KakTerm {
  double angle = 0.0;
  PauliWord word;
  int sign = 1;
};

struct KakData {
  std::vector<KakTerm> k_terms;
  std::vector<KakTerm> a_terms;
};

/// Printed decomposition of the three-qubit Ising Hamiltonian.
KakData default_ising_kak();

enum class ProductOrder { AsListed, Reversed };
std::string to_string(ProductOrder o);

struct KakVerification {
  ProductOrder order = ProductOrder::AsListed;
  /// max |M - sum_j c_j A_j| with M = K^dagger H K.
  double residual = 0.0;
  /// Coefficients c_j of M on the a-term words (sign folded in).
  std::vector<double> coefficients;
  /// max |c_j - a_j angle| over the a-terms.
  double coefficient_error = 0.0;
};

/// K = prod_j exp(-i theta_j s_j P_j); AsListed multiplies left to right in
/// list order, Reversed in reverse. Throws std::invalid_argument if the
/// a-term words do not pairwise commute or qubit counts differ.
KakVerification verify_kak(const PauliSum& h, const KakData& kak, ProductOrder order);
/// Both orders; the smaller residual wins.
KakVerification verify_kak_best(const PauliSum& h, const KakData& kak);

/// 2 * (non-Clifford k-angles) + (non-Clifford a-angles); Clifford means a
/// multiple of pi/4.
int cartan_ppr_count(const KakData& kak, double snap_tol = 1e-6);

/// {"k": [[angle, word], ...], "a": [[angle, word], ...]}; a word may carry
/// a leading '-'.
Json kak_to_json(const KakData& kak);
KakData kak_from_json(const Json& j);

struct IsingPoint {
  double t = 0.0;
  bool converged = false;
  int adapt_count = 0;
  int cartan_count = 0;
  int bricks_used = 0;
  double final_cost = 1.0;
  double snapped_cost = 1.0;
  std::vector<double> theta;
};

/// compile_adapt on exp(-i t H_Ising) per time, then non-Clifford counting.
/// With `refine`, every converged repetition of the final stage is pinned
/// and the lowest count is kept.
std::vector<IsingPoint> ising_adapt_benchmark(int n, const std::vector<double>& times, const CompileConfig& config,
                                              int n_reps = 3, bool refine = true, int jobs = 1);
/// "t,adapt_count,cartan_count" rows.
std::string ising_csv(const std::vector<IsingPoint>& points);

}  // namespace brickwall
