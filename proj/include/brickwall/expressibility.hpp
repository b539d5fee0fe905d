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
#include <span>
#include <string>
#include <vector>

#include "brickwall/circuit.hpp"
#include "brickwall/matrix_io.hpp"

namespace brickwall {

inline constexpr int kFidelityBins = 300;

/// Integral of (N-1)(1-f)^(N-2), N = 2^n, over bin [j/bins, (j+1)/bins].
double haar_bin_mass(int n, int bin, int bins = kFidelityBins);

struct FidelityHistogram {
  std::vector<std::uint64_t> counts = std::vector<std::uint64_t>(kFidelityBins, 0);
  std::uint64_t K = 0;

  int bins() const { return static_cast<int>(counts.size()); }
  /// f = 1 lands in the last bin; values are clamped into [0, 1].
  void add(double f);
  void merge(const FidelityHistogram& other);
};

FidelityHistogram histogram_from_fidelities(std::span<const double> fidelities);

/// K pairs (theta, theta') uniform on the torus, f = |<0|F(theta)^dagger F(theta')|0>|^2.
/// Pairs are drawn in fixed chunks with derived seeds, so `jobs` does not
/// change the result.
FidelityHistogram sample_fidelities(const Circuit& c, std::uint64_t K, std::uint64_t seed, int jobs = 1);

/// Same statistic for pairs of Haar-random states (first columns of Haar
/// unitaries).
FidelityHistogram haar_state_fidelities(int n, std::uint64_t K, std::uint64_t seed);

/// sum p log(p / q) over bins with p > 0. Throws std::invalid_argument for an
/// empty histogram.
double kl_expressibility(const FidelityHistogram& hist, int n);

struct ExpressibilityPoint {
  std::uint64_t K = 0;
  double expr = 0.0;
};

struct ConvergenceStudy {
  std::vector<ExpressibilityPoint> points;
  double slope = 0.0;  // least-squares fit of log Expr against log K
  double intercept = 0.0;
  FidelityHistogram last_histogram;
};

ConvergenceStudy convergence_study(const Circuit& c, const std::vector<std::uint64_t>& K_values, std::uint64_t seed,
                                   int jobs = 1);

/// Fit log y = a + b log x; returns {b, a}. Needs two distinct positive x.
std::pair<double, double> loglog_fit(std::span<const double> x, std::span<const double> y);

/// "bin_center,empirical_density,haar_density" rows.
std::string histogram_csv(const FidelityHistogram& hist, int n);
Json convergence_json(const ConvergenceStudy& s);

}  // namespace brickwall
