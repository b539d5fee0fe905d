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

#include "brickwall/synthesis.hpp"

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>
#include <ceres/iteration_callback.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "brickwall/detail/kernels.hpp"
#include "brickwall/parallel.hpp"
#include "brickwall/seeding.hpp"
#include "brickwall/templates.hpp"

namespace brickwall {

namespace {

void check_target(const Circuit& c, const ComplexMatrix& target) {
  if (target.rows() != c.dim() || target.cols() != c.dim()) {
    throw std::invalid_argument("target is " + std::to_string(target.rows()) + "x" + std::to_string(target.cols()) +
                                ", circuit acts on dimension " + std::to_string(c.dim()));
  }
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int resolved_epochs(const CompileConfig& config, int n) { return config.max_epochs > 0 ? config.max_epochs : 500 * n; }

// Cost restricted to the free parameters; pinned ones are read from `base`.
class MaskedCost final : public ceres::FirstOrderFunction {
 public:
  MaskedCost(const Circuit& c, const ComplexMatrix& target, std::vector<double> base, std::vector<int> free)
      : c_(c), target_(target), theta_(std::move(base)), free_(std::move(free)), grad_(theta_.size()) {}

  bool Evaluate(const double* x, double* cost_out, double* gradient) const override {
    for (std::size_t k = 0; k < free_.size(); ++k) theta_[static_cast<std::size_t>(free_[k])] = x[k];
    *cost_out = cost_and_gradient(c_, theta_, target_, grad_);
    if (gradient != nullptr) {
      for (std::size_t k = 0; k < free_.size(); ++k) gradient[k] = grad_[static_cast<std::size_t>(free_[k])];
    }
    return std::isfinite(*cost_out);
  }

  int NumParameters() const override { return static_cast<int>(free_.size()); }

 private:
  const Circuit& c_;
  const ComplexMatrix& target_;
  mutable std::vector<double> theta_;
  std::vector<int> free_;
  mutable std::vector<double> grad_;
};

class TraceCallback final : public ceres::IterationCallback {
 public:
  TraceCallback(std::vector<double>& costs, double stop_below) : costs_(costs), stop_below_(stop_below) {}

  ceres::CallbackReturnType operator()(const ceres::IterationSummary& s) override {
    costs_.push_back(s.cost);
    return s.cost < stop_below_ ? ceres::SOLVER_TERMINATE_SUCCESSFULLY : ceres::SOLVER_CONTINUE;
  }

 private:
  std::vector<double>& costs_;
  double stop_below_;
};

double clifford_period(const Gate& g) {
  if (g.kind == GateKind::PPR) return std::numbers::pi / (4.0 * std::abs(g.scale));
  return std::numbers::pi / 2.0;
}

double nearest_multiple(double x, double period) { return std::round(x / period) * period; }

}  // namespace

double cost_and_gradient(const Circuit& c, std::span<const double> theta, const ComplexMatrix& target,
                         std::span<double> grad) {
  check_target(c, target);
  if (static_cast<int>(grad.size()) != c.num_params()) throw std::invalid_argument("gradient buffer has wrong length");
  const int n = c.num_qubits();
  const double dim = static_cast<double>(c.dim());
  ComplexMatrix b = target.adjoint() * evaluate(c, theta);
  const Complex t = b.trace();
  const double abs_t = std::abs(t);
  const double value = 1.0 - abs_t / dim;
  std::fill(grad.begin(), grad.end(), 0.0);
  if (abs_t == 0.0) return value;
  // B_k = G_k B_{k-1} G_k^dagger, d t / d theta_k = tr(Gamma_k B_k).
  for (const auto& g : c.gates()) {
    const auto local = detail::resolve(g, n, theta);
    detail::apply_left(local, b);
    detail::apply_right(detail::adjoint(local), b);
    if (g.is_parametric()) {
      const Complex dt = detail::trace_generator_product(detail::generator_of(g, n), b);
      grad[static_cast<std::size_t>(g.param)] = -(std::conj(t) * dt).real() / (dim * abs_t);
    }
  }
  return value;
}

double cost(const Circuit& c, std::span<const double> theta, const ComplexMatrix& target) {
  check_target(c, target);
  const Complex t = target.conjugate().cwiseProduct(evaluate(c, theta)).sum();
  return 1.0 - std::abs(t) / static_cast<double>(c.dim());
}

std::vector<double> cost_gradient(const Circuit& c, std::span<const double> theta, const ComplexMatrix& target) {
  std::vector<double> grad(static_cast<std::size_t>(c.num_params()));
  cost_and_gradient(c, theta, target, grad);
  return grad;
}

AttemptTrace minimize_cost(const Circuit& c, const ComplexMatrix& target, std::vector<double> theta0,
                           const CompileConfig& config, const std::vector<bool>& free_mask) {
  check_target(c, target);
  if (static_cast<int>(theta0.size()) != c.num_params()) throw std::invalid_argument("start point has wrong length");
  std::vector<int> free;
  for (int j = 0; j < c.num_params(); ++j) {
    if (free_mask.empty() || free_mask[static_cast<std::size_t>(j)]) free.push_back(j);
  }
  AttemptTrace trace;
  const int epochs = resolved_epochs(config, c.num_qubits());
  if (free.empty()) {
    trace.final_cost = cost(c, theta0, target);
    trace.costs.push_back(trace.final_cost);
    trace.theta = std::move(theta0);
    trace.converged = trace.final_cost < config.epsilon;
    return trace;
  }

  std::vector<double> x(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) x[k] = theta0[static_cast<std::size_t>(free[k])];

  if (config.optimizer == Optimizer::GradientDescent) {
    MaskedCost f(c, target, theta0, free);
    std::vector<double> g(free.size());
    double value = 0.0;
    for (int e = 0; e <= epochs; ++e) {
      f.Evaluate(x.data(), &value, g.data());
      trace.costs.push_back(value);
      if (value < config.target_precision || e == epochs) break;
      for (std::size_t k = 0; k < x.size(); ++k) x[k] -= config.gd_step * g[k];
    }
  } else {
    ceres::GradientProblem problem(new MaskedCost(c, target, theta0, free));
    ceres::GradientProblemSolver::Options options;
    options.line_search_direction_type = ceres::LBFGS;
    options.line_search_type = ceres::WOLFE;
    options.max_lbfgs_rank = config.lbfgs_memory > 0 ? config.lbfgs_memory : 5 * static_cast<int>(free.size());
    options.max_num_iterations = epochs;
    options.function_tolerance = 0.0;
    options.gradient_tolerance = 0.0;
    options.parameter_tolerance = 0.0;
    options.logging_type = ceres::SILENT;
    TraceCallback callback(trace.costs, config.target_precision);
    options.callbacks.push_back(&callback);
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(options, problem, x.data(), &summary);
  }

  trace.theta = std::move(theta0);
  for (std::size_t k = 0; k < free.size(); ++k) trace.theta[static_cast<std::size_t>(free[k])] = x[k];
  trace.final_cost = cost(c, trace.theta, target);
  trace.converged = trace.final_cost < config.epsilon;
  return trace;
}

CompileReport compile(const ComplexMatrix& target, const Circuit& ansatz, GroupLabel group,
                      const CompileConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  check_target(ansatz, target);
  if (!(config.epsilon > 0.0) || !(config.init_sigma > 0.0) || config.max_attempts < 1) {
    throw std::invalid_argument("compile config needs epsilon > 0, init_sigma > 0, max_attempts >= 1");
  }
  if (config.check_membership && !is_group_member(target, group)) {
    throw std::invalid_argument("target is not a member of " + to_string(group));
  }
  CompileReport report;
  int best = -1;
  for (int a = 0; a < config.max_attempts; ++a) {
    Rng rng(derive_seed(config.seed, {static_cast<std::uint64_t>(a)}));
    auto trace = minimize_cost(ansatz, target, normal_angles(ansatz.num_params(), config.init_sigma, rng), config);
    report.epochs_per_attempt.push_back(static_cast<int>(trace.costs.size()));
    report.successful_attempts += trace.converged;
    if (best < 0 || trace.final_cost < report.traces[static_cast<std::size_t>(best)].final_cost) best = a;
    const bool done = trace.converged && config.stop_on_success;
    report.traces.push_back(std::move(trace));
    ++report.attempts_used;
    if (done) break;
  }
  const auto& winner = report.traces[static_cast<std::size_t>(best)];
  report.final_cost = winner.final_cost;
  report.theta = winner.theta;
  report.converged = report.final_cost < config.epsilon;
  const auto snap = count_non_clifford(ansatz, report.theta, config.snap_tol);
  report.non_clifford_count = snap.count;
  report.snapped_cost = cost(ansatz, snap.snapped, target);
  report.wall_time = elapsed_since(t0);
  return report;
}

CompileReport compile(const ComplexMatrix& target, GroupLabel group, int n, const CompileConfig& config) {
  return compile(target, build_template(group, n), group, config);
}

CompileReport compile_adapt(const ComplexMatrix& target, GroupLabel group, int n, const CompileConfig& config,
                            int n_reps) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n_reps < 1) throw std::invalid_argument("n_reps must be at least 1");
  const auto spec = template_spec(group, n);
  if (target.rows() != hilbert_dim(n) || target.cols() != hilbert_dim(n)) {
    throw std::invalid_argument("target dimension does not match qubit count");
  }
  if (config.check_membership && !is_group_member(target, group)) {
    throw std::invalid_argument("target is not a member of " + to_string(group));
  }
  CompileConfig stage = config;
  stage.max_attempts = n_reps;
  stage.check_membership = false;
  CompileReport total;
  for (int k = 0; k <= spec.num_bricks(); ++k) {
    stage.seed = derive_seed(config.seed, {static_cast<std::uint64_t>(k)});
    auto rep = compile(target, realize(spec, k), group, stage);
    total.attempts_used += rep.attempts_used;
    total.successful_attempts += rep.successful_attempts;
    total.epochs_per_attempt.insert(total.epochs_per_attempt.end(), rep.epochs_per_attempt.begin(),
                                    rep.epochs_per_attempt.end());
    for (auto& tr : rep.traces) total.traces.push_back(std::move(tr));
    total.final_cost = rep.final_cost;
    total.theta = std::move(rep.theta);
    total.non_clifford_count = rep.non_clifford_count;
    total.snapped_cost = rep.snapped_cost;
    total.bricks_used = k;
    if (rep.converged) {
      total.converged = true;
      break;
    }
  }
  total.wall_time = elapsed_since(t0);
  return total;
}

SnapResult count_non_clifford(std::span<const double> theta, double snap_tol, double period) {
  if (period <= 0.0) period = std::numbers::pi / 2.0;
  SnapResult r;
  r.snapped.assign(theta.begin(), theta.end());
  for (auto& t : r.snapped) {
    const double m = nearest_multiple(t, period);
    if (std::abs(t - m) <= snap_tol) {
      t = m;
    } else {
      ++r.count;
    }
  }
  return r;
}

SnapResult count_non_clifford(const Circuit& c, std::span<const double> theta, double snap_tol) {
  if (static_cast<int>(theta.size()) != c.num_params()) throw std::invalid_argument("parameter vector has wrong length");
  SnapResult r;
  r.snapped.assign(theta.begin(), theta.end());
  for (int j = 0; j < c.num_params(); ++j) {
    const double period = clifford_period(c.gates()[static_cast<std::size_t>(c.gate_of_param(j))]);
    auto& t = r.snapped[static_cast<std::size_t>(j)];
    const double m = nearest_multiple(t, period);
    if (std::abs(t - m) <= snap_tol) {
      t = m;
    } else {
      ++r.count;
    }
  }
  return r;
}

namespace {

constexpr int kRefineOrders = 4;

// One greedy pass in the given order; returns the number of angles pinned.
int pin_in_order(const Circuit& c, const ComplexMatrix& target, const std::vector<int>& order,
                 const std::vector<double>& period, const CompileConfig& config, std::vector<double>& theta) {
  std::vector<bool> free(theta.size(), true);
  int pinned = 0;
  for (int j : order) {
    const auto ju = static_cast<std::size_t>(j);
    auto trial = theta;
    trial[ju] = nearest_multiple(theta[ju], period[ju]);
    free[ju] = false;
    auto tr = minimize_cost(c, target, std::move(trial), config, free);
    if (tr.converged) {
      theta = std::move(tr.theta);
      ++pinned;
    } else {
      free[ju] = true;
    }
  }
  return pinned;
}

}  // namespace

std::vector<double> clifford_refine(const Circuit& c, const ComplexMatrix& target, std::vector<double> theta,
                                    const CompileConfig& config) {
  const int d = c.num_params();
  std::vector<double> period(static_cast<std::size_t>(d));
  std::vector<double> gap(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    period[ju] = clifford_period(c.gates()[static_cast<std::size_t>(c.gate_of_param(j))]);
    gap[ju] = std::abs(theta[ju] - nearest_multiple(theta[ju], period[ju]));
  }
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&gap](int a, int b) {
    return gap[static_cast<std::size_t>(a)] < gap[static_cast<std::size_t>(b)];
  });
  // Greedy pinning is order dependent: the closest-first order is tried
  // first, then seeded shuffles; the run pinning the most angles wins.
  std::vector<double> best;
  int best_pinned = -1;
  Rng rng(derive_seed(config.seed, {hash_string("clifford_refine")}));
  for (int k = 0; k < kRefineOrders; ++k) {
    if (k > 0) std::shuffle(order.begin(), order.end(), rng);
    auto trial = theta;
    const int pinned = pin_in_order(c, target, order, period, config, trial);
    if (pinned > best_pinned) {
      best_pinned = pinned;
      best = std::move(trial);
    }
    if (best_pinned == d) break;
  }
  return best;
}

std::vector<double> default_epsilon_grid() {
  std::vector<double> grid;
  for (int e = 2; e <= 12; ++e) grid.push_back(std::pow(10.0, -e));
  return grid;
}

BatchResult batch_compile(const std::vector<ComplexMatrix>& targets, const Circuit& ansatz, GroupLabel group,
                          const CompileConfig& config, int jobs, const std::vector<double>& epsilon_grid) {
  BatchResult out;
  out.reports.resize(targets.size());
  parallel_for(targets.size(), jobs, [&](std::size_t i) {
    CompileConfig cfg = config;
    cfg.seed = derive_seed(config.seed, {static_cast<std::uint64_t>(i)});
    out.reports[i] = compile(targets[i], ansatz, group, cfg);
  });
  std::vector<double> finals;
  for (const auto& r : out.reports) {
    out.converged_targets += r.converged;
    out.total_attempts += r.attempts_used;
    out.successful_attempts += r.successful_attempts;
    for (const auto& t : r.traces) finals.push_back(t.final_cost);
  }
  auto grid = epsilon_grid;
  std::sort(grid.begin(), grid.end(), std::greater<>());
  for (double eps : grid) {
    const auto hits = std::count_if(finals.begin(), finals.end(), [eps](double f) { return f < eps; });
    out.success_curve.push_back(
        {eps, finals.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(finals.size())});
  }
  return out;
}

Json compile_report_json(const CompileReport& r) {
  Json attempts = Json::array();
  for (std::size_t a = 0; a < r.traces.size(); ++a) {
    attempts.push_back({{"final_cost", r.traces[a].final_cost},
                        {"converged", r.traces[a].converged},
                        {"epochs", r.epochs_per_attempt[a]}});
  }
  Json j{{"converged", r.converged},
         {"final_cost", r.final_cost},
         {"theta", r.theta},
         {"attempts_used", r.attempts_used},
         {"successful_attempts", r.successful_attempts},
         {"attempts", std::move(attempts)},
         {"non_clifford_count", r.non_clifford_count},
         {"snapped_cost", r.snapped_cost},
         {"meta", {{"wall_time", r.wall_time}}}};
  if (r.bricks_used >= 0) j["bricks_used"] = r.bricks_used;
  return j;
}

std::string cost_trace_csv(const CompileReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "attempt,epoch,cost\n";
  for (std::size_t a = 0; a < r.traces.size(); ++a) {
    const auto& costs = r.traces[a].costs;
    for (std::size_t e = 0; e < costs.size(); ++e) os << a << ',' << e << ',' << costs[e] << '\n';
  }
  return os.str();
}

}  // namespace brickwall
