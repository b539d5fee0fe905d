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

/// 1 - |tr(U^dagger V(theta))| / 2^n. Throws std::invalid_argument on a
/// dimension mismatch.
double cost(const Circuit& c, std::span<const double> theta, const ComplexMatrix& target);

/// Gradient of cost(). Zero vector where tr(U^dagger V) vanishes.
std::vector<double> cost_gradient(const Circuit& c, std::span<const double> theta, const ComplexMatrix& target);

/// Both at once in O(gates * 4^n); `grad` must have length d.
double cost_and_gradient(const Circuit& c, std::span<const double> theta, const ComplexMatrix& target,
                         std::span<double> grad);

enum class Optimizer { Lbfgs, GradientDescent };

struct CompileConfig {
  double epsilon = 1e-10;
  double target_precision = 1e-12;
  int max_epochs = 0;  // 0 selects 500 n
  int max_attempts = 25;
  double init_sigma = 0.2;
  int lbfgs_memory = 0;  // 0 selects 5 d
  std::uint64_t seed = 0;
  Optimizer optimizer = Optimizer::Lbfgs;
  double gd_step = 0.05;
  bool stop_on_success = true;
  double snap_tol = 1e-6;
  bool check_membership = true;
};

struct AttemptTrace {
  std::vector<double> costs;  // one entry per epoch, starting at the initial point
  double final_cost = 1.0;
  bool converged = false;
  std::vector<double> theta;
};

struct CompileReport {
  bool converged = false;
  double final_cost = 1.0;
  std::vector<double> theta;
  int attempts_used = 0;
  int successful_attempts = 0;
  std::vector<int> epochs_per_attempt;
  double wall_time = 0.0;
  int non_clifford_count = 0;
  double snapped_cost = 1.0;
  std::vector<AttemptTrace> traces;
  int bricks_used = -1;  // set by compile_adapt
};

/// Local minimisation from a given start; `free_mask` (if non-empty) marks
/// the parameters allowed to move.
AttemptTrace minimize_cost(const Circuit& c, const ComplexMatrix& target, std::vector<double> theta0,
                           const CompileConfig& config, const std::vector<bool>& free_mask = {});

/// Random restarts on `ansatz` until an attempt ends below epsilon (or all
/// attempts run, if stop_on_success is false). Throws std::invalid_argument
/// if the target is not a member of `group` or has the wrong size.
CompileReport compile(const ComplexMatrix& target, const Circuit& ansatz, GroupLabel group,
                      const CompileConfig& config);
/// Same on the group's brick wall template.
CompileReport compile(const ComplexMatrix& target, GroupLabel group, int n, const CompileConfig& config);

/// Grows the template one brick at a time with up to n_reps attempts per
/// stage. bricks_used reports the first converging stage.
CompileReport compile_adapt(const ComplexMatrix& target, GroupLabel group, int n, const CompileConfig& config,
                            int n_reps = 3);

struct SnapResult {
  int count = 0;
  std::vector<double> snapped;
};

/// Angles within snap_tol of a multiple of `period` are snapped and not
/// counted. period defaults to pi/2 (rotation convention).
SnapResult count_non_clifford(std::span<const double> theta, double snap_tol = 1e-6, double period = 0.0);
/// Per-gate Clifford period: pi / (4 |scale|) for PPR, pi / 2 for rotations.
SnapResult count_non_clifford(const Circuit& c, std::span<const double> theta, double snap_tol = 1e-6);

/// Pins angles one at a time to their nearest Clifford value, re-optimising
/// the rest; a pin is kept if the cost stays below epsilon. Several pin
/// orders are tried (closest-first, then seeded shuffles) and the one that
/// pins the most angles is returned.
std::vector<double> clifford_refine(const Circuit& c, const ComplexMatrix& target, std::vector<double> theta,
                                    const CompileConfig& config);

struct SuccessPoint {
  double epsilon = 0.0;
  double kappa = 0.0;  // fraction of attempts with final cost < epsilon
};

struct BatchResult {
  std::vector<CompileReport> reports;
  int converged_targets = 0;
  int total_attempts = 0;
  int successful_attempts = 0;
  /// Ordered from loose to strict thresholds.
  std::vector<SuccessPoint> success_curve;
};

/// Default threshold grid 1e-2 ... 1e-12.
std::vector<double> default_epsilon_grid();

BatchResult batch_compile(const std::vector<ComplexMatrix>& targets, const Circuit& ansatz, GroupLabel group,
                          const CompileConfig& config, int jobs = 1,
                          const std::vector<double>& epsilon_grid = default_epsilon_grid());

Json compile_report_json(const CompileReport& r);
/// "attempt,epoch,cost" rows.
std::string cost_trace_csv(const CompileReport& r);

}  // namespace brickwall
