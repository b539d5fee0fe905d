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

#include "brickwall/expressibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "brickwall/parallel.hpp"
#include "brickwall/seeding.hpp"

namespace brickwall {

namespace {

constexpr std::uint64_t kChunk = 4096;

}  // namespace

double haar_bin_mass(int n, int bin, int bins) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  if (bins < 1 || bin < 0 || bin >= bins) throw std::invalid_argument("bin index out of range");
  const double power = static_cast<double>(hilbert_dim(n) - 1);
  const double a = static_cast<double>(bin) / bins;
  const double b = static_cast<double>(bin + 1) / bins;
  return std::pow(1.0 - a, power) - (bin + 1 == bins ? 0.0 : std::pow(1.0 - b, power));
}

void FidelityHistogram::add(double f) {
  const int nb = bins();
  const int idx = std::clamp(static_cast<int>(std::floor(f * nb)), 0, nb - 1);
  ++counts[static_cast<std::size_t>(idx)];
  ++K;
}

void FidelityHistogram::merge(const FidelityHistogram& other) {
  if (other.bins() != bins()) throw std::invalid_argument("histogram bin counts differ");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  K += other.K;
}

FidelityHistogram histogram_from_fidelities(std::span<const double> fidelities) {
  FidelityHistogram h;
  for (double f : fidelities) h.add(f);
  return h;
}

FidelityHistogram sample_fidelities(const Circuit& c, std::uint64_t K, std::uint64_t seed, int jobs) {
  const std::size_t chunks = static_cast<std::size_t>((K + kChunk - 1) / kChunk);
  std::vector<FidelityHistogram> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t i) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    const std::uint64_t count = std::min<std::uint64_t>(kChunk, K - i * kChunk);
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto a = uniform_angles(c.num_params(), rng);
      const auto b = uniform_angles(c.num_params(), rng);
      const Complex overlap = state_evolve(c, a, 0).dot(state_evolve(c, b, 0));
      partial[i].add(std::norm(overlap));
    }
  });
  FidelityHistogram out;
  for (const auto& p : partial) out.merge(p);
  return out;
}

FidelityHistogram haar_state_fidelities(int n, std::uint64_t K, std::uint64_t seed) {
  FidelityHistogram out;
  for (std::uint64_t k = 0; k < K; ++k) {
    const ComplexVector a = haar_unitary(n, derive_seed(seed, {k, 0})).col(0);
    const ComplexVector b = haar_unitary(n, derive_seed(seed, {k, 1})).col(0);
    out.add(std::norm(a.dot(b)));
  }
  return out;
}

double kl_expressibility(const FidelityHistogram& hist, int n) {
  if (hist.K == 0) throw std::invalid_argument("expressibility of an empty histogram is undefined");
  double kl = 0.0;
  for (int j = 0; j < hist.bins(); ++j) {
    const auto cnt = hist.counts[static_cast<std::size_t>(j)];
    if (cnt == 0) continue;
    const double p = static_cast<double>(cnt) / static_cast<double>(hist.K);
    const double q = haar_bin_mass(n, j, hist.bins());
    if (!(q > 0.0)) throw std::invalid_argument("Haar bin mass vanished for an occupied bin");
    kl += p * std::log(p / q);
  }
  return std::max(kl, 0.0);
}

std::pair<double, double> loglog_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("log-log fit needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("log-log fit needs positive values");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = m * sxx - sx * sx;
  if (den == 0.0) throw std::invalid_argument("log-log fit needs distinct x values");
  const double slope = (m * sxy - sx * sy) / den;
  return {slope, (sy - slope * sx) / m};
}

ConvergenceStudy convergence_study(const Circuit& c, const std::vector<std::uint64_t>& K_values, std::uint64_t seed,
                                   int jobs) {
  ConvergenceStudy s;
  std::vector<double> xs, ys;
  for (auto K : K_values) {
    auto hist = sample_fidelities(c, K, derive_seed(seed, {K}), jobs);
    const double expr = kl_expressibility(hist, c.num_qubits());
    s.points.push_back({K, expr});
    if (expr > 0.0) {
      xs.push_back(static_cast<double>(K));
      ys.push_back(expr);
    }
    s.last_histogram = std::move(hist);
  }
  if (xs.size() >= 2) std::tie(s.slope, s.intercept) = loglog_fit(xs, ys);
  return s;
}

std::string histogram_csv(const FidelityHistogram& hist, int n) {
  std::ostringstream os;
  os.precision(17);
  os << "bin_center,empirical_density,haar_density\n";
  const double width = 1.0 / hist.bins();
  for (int j = 0; j < hist.bins(); ++j) {
    const double p = hist.K ? static_cast<double>(hist.counts[static_cast<std::size_t>(j)]) / static_cast<double>(hist.K) : 0.0;
    os << (j + 0.5) * width << ',' << p / width << ',' << haar_bin_mass(n, j, hist.bins()) / width << '\n';
  }
  return os.str();
}

Json convergence_json(const ConvergenceStudy& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back({{"K", p.K}, {"expr", p.expr}});
  return Json{{"points", std::move(pts)}, {"slope", s.slope}, {"intercept", s.intercept},
              {"parameter_distribution", "uniform"}, {"initial_state", "zero"}};
}

}  // namespace brickwall
