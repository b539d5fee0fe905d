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

#include "brickwall/applications.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "brickwall/parallel.hpp"
#include "brickwall/seeding.hpp"
#include "brickwall/templates.hpp"

namespace brickwall {

void PauliSum::add(double coeff, const PauliWord& word) {
  if (word.size() != n_) throw std::invalid_argument("Pauli word length does not match the sum");
  for (auto& t : terms_) {
    if (t.word == word) {
      t.coeff += coeff;
      return;
    }
  }
  terms_.push_back({coeff, word});
}

ComplexMatrix PauliSum::matrix() const {
  const long dim = hilbert_dim(n_);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : terms_) m += t.coeff * pauli_matrix(t.word);
  return m;
}

PauliSum ising_hamiltonian(int n) {
  if (n < 1) throw std::invalid_argument("Ising chain needs n >= 1");
  PauliSum h(n);
  for (int j = 0; j < n; ++j) h.add(1.0, PauliWord::single(n, j, Pauli::Z));
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<Pauli> letters(static_cast<std::size_t>(n), Pauli::I);
    letters[static_cast<std::size_t>(j)] = Pauli::X;
    letters[static_cast<std::size_t>(j + 1)] = Pauli::X;
    h.add(1.0, PauliWord(letters));
  }
  return h;
}

ComplexMatrix matrix_exponential_hermitian(const PauliSum& h, double t) { return expm_hermitian(h.matrix(), t); }

KakData default_ising_kak() {
  auto term = [](double angle, const char* word) { return KakTerm{angle, PauliWord::parse(word), 1}; };
  KakData kak;
  kak.k_terms = {term(-1.0387190968491462, "YXI"), term(1.317475393343197, "XYI"),
                 term(-1.9850892304110668, "IYX"), term(-0.4142929036161686, "IXY"),
                 term(0.25332093345170165, "YZX"), term(1.038719096849147, "XZY")};
  kak.a_terms = {term(1.2469796037174674, "XXI"), term(1.8019377358048387, "IIZ"),
                 term(-0.44504186791262884, "YYI")};
  return kak;
}

std::string to_string(ProductOrder o) { return o == ProductOrder::AsListed ? "as_listed" : "reversed"; }

KakVerification verify_kak(const PauliSum& h, const KakData& kak, ProductOrder order) {
  const int n = h.num_qubits();
  for (const auto* list : {&kak.k_terms, &kak.a_terms}) {
    for (const auto& t : *list) {
      if (t.word.size() != n) throw std::invalid_argument("KAK word length does not match the Hamiltonian");
      if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("KAK term sign must be +1 or -1");
    }
  }
  for (std::size_t i = 0; i < kak.a_terms.size(); ++i)
    for (std::size_t j = i + 1; j < kak.a_terms.size(); ++j)
      if (!kak.a_terms[i].word.commutes_with(kak.a_terms[j].word)) {
        throw std::invalid_argument("Cartan words " + kak.a_terms[i].word.str() + " and " +
                                    kak.a_terms[j].word.str() + " do not commute");
      }

  const long dim = hilbert_dim(n);
  ComplexMatrix k = ComplexMatrix::Identity(dim, dim);
  // exp(-i a P) = cos(a) I - i sin(a) P for a Pauli word P.
  auto factor = [dim](const KakTerm& t) {
    const double a = t.angle * t.sign;
    return ComplexMatrix(std::cos(a) * ComplexMatrix::Identity(dim, dim) -
                         Complex(0, std::sin(a)) * pauli_matrix(t.word));
  };
  if (order == ProductOrder::AsListed) {
    for (const auto& t : kak.k_terms) k = k * factor(t);
  } else {
    for (auto it = kak.k_terms.rbegin(); it != kak.k_terms.rend(); ++it) k = k * factor(*it);
  }
  const ComplexMatrix m = k.adjoint() * h.matrix() * k;

  KakVerification out;
  out.order = order;
  ComplexMatrix fit = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : kak.a_terms) {
    const ComplexMatrix p = pauli_matrix(t.word);
    const double c = trace_inner_product(p, m).real() * t.sign;
    out.coefficients.push_back(c);
    out.coefficient_error = std::max(out.coefficient_error, std::abs(c - t.angle));
    fit += (c * t.sign) * p;
  }
  out.residual = (m - fit).cwiseAbs().maxCoeff();
  return out;
}

KakVerification verify_kak_best(const PauliSum& h, const KakData& kak) {
  auto a = verify_kak(h, kak, ProductOrder::AsListed);
  auto b = verify_kak(h, kak, ProductOrder::Reversed);
  return b.residual < a.residual ? b : a;
}

int cartan_ppr_count(const KakData& kak, double snap_tol) {
  const double period = std::numbers::pi / 4.0;
  auto non_clifford = [&](const KakTerm& t) {
    const double a = t.angle * t.sign;
    return std::abs(a - std::round(a / period) * period) > snap_tol;
  };
  int count = 0;
  for (const auto& t : kak.k_terms) count += 2 * non_clifford(t);
  for (const auto& t : kak.a_terms) count += non_clifford(t);
  return count;
}

namespace {

Json terms_to_json(const std::vector<KakTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(Json::array({t.angle, (t.sign < 0 ? "-" : "") + t.word.str()}));
  return out;
}

std::vector<KakTerm> terms_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw SchemaError(std::string("KAK: \"") + key + "\" must be an array");
  std::vector<KakTerm> out;
  for (const auto& e : j[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_string()) {
      throw SchemaError("KAK: each term must be [angle, word]");
    }
    std::string word = e[1].get<std::string>();
    int sign = 1;
    if (!word.empty() && (word[0] == '-' || word[0] == '+')) {
      sign = word[0] == '-' ? -1 : 1;
      word.erase(0, 1);
    }
    try {
      out.push_back({e[0].get<double>(), PauliWord::parse(word), sign});
    } catch (const std::invalid_argument& err) {
      throw SchemaError(std::string("KAK: ") + err.what());
    }
  }
  return out;
}

}  // namespace

Json kak_to_json(const KakData& kak) { return Json{{"k", terms_to_json(kak.k_terms)}, {"a", terms_to_json(kak.a_terms)}}; }

KakData kak_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("KAK: expected an object");
  return KakData{terms_from_json(j, "k"), terms_from_json(j, "a")};
}

std::vector<IsingPoint> ising_adapt_benchmark(int n, const std::vector<double>& times, const CompileConfig& config,
                                              int n_reps, bool refine, int jobs) {
  const auto h = ising_hamiltonian(n);
  const int cartan = n == 3 ? cartan_ppr_count(default_ising_kak()) : -1;
  std::vector<IsingPoint> out(times.size());
  parallel_for(times.size(), jobs, [&](std::size_t i) {
    auto& p = out[i];
    p.t = times[i];
    p.cartan_count = cartan;
    const ComplexMatrix target = matrix_exponential_hermitian(h, p.t);
    CompileConfig cfg = config;
    cfg.seed = derive_seed(config.seed, {static_cast<std::uint64_t>(i)});
    // When refining, run every repetition of the converging stage: pinning is
    // greedy, so different converged solutions end at different counts.
    if (refine) cfg.stop_on_success = false;
    const auto rep = compile_adapt(target, GroupLabel::SU, n, cfg, n_reps);
    p.converged = rep.converged;
    p.bricks_used = rep.bricks_used;
    p.theta = rep.theta;
    const auto circuit = truncated_template(GroupLabel::SU, n, rep.bricks_used);
    auto snap = count_non_clifford(circuit, p.theta, cfg.snap_tol);
    if (rep.converged && refine) {
      const std::size_t last = rep.traces.size() - std::min<std::size_t>(rep.traces.size(), n_reps);
      bool have = false;
      for (std::size_t k = last; k < rep.traces.size(); ++k) {
        if (!rep.traces[k].converged) continue;
        auto theta = clifford_refine(circuit, target, rep.traces[k].theta, cfg);
        auto s = count_non_clifford(circuit, theta, cfg.snap_tol);
        if (!have || s.count < snap.count) {
          have = true;
          p.theta = std::move(theta);
          snap = std::move(s);
        }
      }
    }
    p.final_cost = cost(circuit, p.theta, target);
    p.adapt_count = snap.count;
    p.snapped_cost = cost(circuit, snap.snapped, target);
  });
  return out;
}

std::string ising_csv(const std::vector<IsingPoint>& points) {
  std::ostringstream os;
  os.precision(17);
  os << "t,adapt_count,cartan_count\n";
  for (const auto& p : points) os << p.t << ',' << p.adapt_count << ',' << p.cartan_count << '\n';
  return os.str();
}

}  // namespace brickwall
