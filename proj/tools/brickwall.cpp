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

// brickwall: command-line front end. Every subcommand prints one JSON line
// on stdout. Exit codes: 0 success, 1 criterion not met, 2 usage or input
// error.

#include <CLI11.hpp>
#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brickwall/applications.hpp"
#include "brickwall/circuit_io.hpp"
#include "brickwall/expressibility.hpp"
#include "brickwall/rank_search.hpp"
#include "brickwall/synthesis.hpp"
#include "brickwall/templates.hpp"

namespace bw = brickwall;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnmet = 1;
constexpr int kExitUsage = 2;

// {"subcommand": {"option": value}}, top-level scalars address global options.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}\n"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    bw::Json j;
    try {
      input >> j;
    } catch (const bw::Json::exception& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const bw::Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void collect(const bw::Json& j, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& out) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto p = parents;
        p.push_back(key);
        collect(value, p, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      out.push_back(std::move(item));
    }
  }
};

std::string hostname() {
  char buf[256] = {0};
  if (gethostname(buf, sizeof(buf) - 1) != 0) return "unknown";
  return buf;
}

bw::Json meta(std::chrono::steady_clock::time_point t0) {
  return {{"wall_time", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
          {"host", hostname()}};
}

void emit(const bw::Json& summary) { std::cout << summary.dump() << std::endl; }

void write_json(const std::string& path, const bw::Json& j) {
  if (!path.empty()) bw::write_text_atomic(path, j.dump(2) + "\n");
}

void write_text(const std::string& path, const std::string& text) {
  if (!path.empty()) bw::write_text_atomic(path, text);
}

bw::GroupLabel group_of(const std::string& s) { return bw::parse_group(s); }

bw::Circuit read_circuit(const std::string& path) { return bw::circuit_from_json(bw::parse_json(bw::read_text(path))); }


struct TemplateArgs {
  std::string group;
  int n = 0;
  bool ppr = false;
  std::string variant;
  std::string out;
};

int cmd_template(const TemplateArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = group_of(a.group);
  bw::Circuit c;
  if (a.variant.empty()) {
    c = bw::build_template(g, a.n);
  } else {
    if (g != bw::GroupLabel::SU || a.n != 3) throw std::invalid_argument("--variant applies to --group su --n 3 only");
    c = bw::build_three_qubit_variant(a.variant == "block" ? bw::ThreeQubitVariant::Block
                                                           : bw::ThreeQubitVariant::BrickWall);
  }
  auto summary = bw::counts_report(g, a.n);
  summary["params"] = c.num_params();
  summary["two_qubit"] = c.entangler_count();
  summary["command"] = "template";
  if (a.ppr) {
    const auto p = bw::to_ppr(c);
    summary["ppr"] = {{"params", p.num_params()},
                      {"ppr_gates", p.count(bw::GateKind::PPR)},
                      {"residual_cz", p.count(bw::GateKind::CZ)}};
    c = p;
  }
  write_json(a.out, bw::circuit_to_json(c));
  summary["meta"] = meta(t0);
  emit(summary);
  return kExitOk;
}

struct RankArgs {
  std::string circuit;
  std::string group = "su";
  int n = 0;
  std::uint64_t seed = 0;
  int retries = 2;
  double rel_tol = 1e-8;
  std::string out;
};

int cmd_rank_test(const RankArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = group_of(a.group);
  bw::Circuit c;
  if (!a.circuit.empty()) {
    c = read_circuit(a.circuit);
  } else {
    if (a.n == 0) throw std::invalid_argument("rank-test needs --circuit or --n");
    c = bw::build_template(g, a.n);
  }
  const auto r = bw::rank_test(c, g, a.seed, a.retries, a.rel_tol);
  bw::Json summary{{"command", "rank-test"}, {"group", bw::to_string(g)}, {"n", c.num_qubits()},
                   {"d", c.num_params()},    {"rank", r.rank},               {"target", r.target},
                   {"full", r.full},         {"samples", r.samples},         {"rel_tol", r.rel_tol}};
  auto file = summary;
  file["theta"] = r.theta;
  write_json(a.out, file);
  summary["meta"] = meta(t0);
  emit(summary);
  return r.full ? kExitOk : kExitUnmet;
}

struct SearchArgs {
  bw::SearchConfig cfg;
  std::string out;
};

int cmd_search(SearchArgs a) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = bw::run_search(a.cfg);
  write_text(a.out, bw::search_jsonl(r));
  emit({{"command", "search"},
        {"n", a.cfg.n},
        {"c", a.cfg.c},
        {"nn_only", a.cfg.nearest_neighbour_only},
        {"no_four_repeats", a.cfg.forbid_four_repeats},
        {"seed", a.cfg.seed},
        {"retries", a.cfg.retries},
        {"candidates", r.candidates},
        {"passing", r.passing},
        {"meta", meta(t0)}});
  return kExitOk;
}

struct CompileArgs {
  std::string target;
  std::optional<std::uint64_t> haar;
  std::string group = "su";
  int n = 3;
  bool adaptive = false;
  int n_reps = 3;
  std::string optimizer = "lbfgs";
  bw::CompileConfig cfg;
  std::string out;
  std::string trace_out;
};

int cmd_compile(CompileArgs a) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = group_of(a.group);
  bw::ComplexMatrix target;
  if (!a.target.empty()) {
    target = bw::matrix_from_json(bw::parse_json(bw::read_text(a.target)));
  } else if (a.haar) {
    target = bw::random_group_element(g, a.n, *a.haar);
  } else {
    throw std::invalid_argument("compile needs --target or --haar");
  }
  if (target.rows() != bw::hilbert_dim(a.n)) throw std::invalid_argument("target dimension does not match --n");
  a.cfg.optimizer = a.optimizer == "gd" ? bw::Optimizer::GradientDescent : bw::Optimizer::Lbfgs;
  const auto r = a.adaptive ? bw::compile_adapt(target, g, a.n, a.cfg, a.n_reps) : bw::compile(target, g, a.n, a.cfg);
  auto report = bw::compile_report_json(r);
  report["group"] = bw::to_string(g);
  report["n"] = a.n;
  write_json(a.out, report);
  write_text(a.trace_out, bw::cost_trace_csv(r));
  bw::Json summary{{"command", "compile"},
                   {"group", bw::to_string(g)},
                   {"n", a.n},
                   {"converged", r.converged},
                   {"final_cost", r.final_cost},
                   {"attempts_used", r.attempts_used},
                   {"non_clifford_count", r.non_clifford_count}};
  if (a.adaptive) summary["bricks_used"] = r.bricks_used;
  summary["meta"] = meta(t0);
  emit(summary);
  return r.converged ? kExitOk : kExitUnmet;
}

struct ExprArgs {
  std::string group = "su";
  int n = 3;
  std::vector<std::uint64_t> k_values{100, 1000, 10000};
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out;
  std::string summary_out;
};

int cmd_expressibility(const ExprArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = group_of(a.group);
  if (a.k_values.empty()) throw std::invalid_argument("--k-values must not be empty");
  for (auto k : a.k_values)
    if (k == 0) throw std::invalid_argument("--k-values entries must be positive");
  const auto s = bw::convergence_study(bw::build_template(g, a.n), a.k_values, a.seed, a.jobs);
  write_text(a.out, bw::histogram_csv(s.last_histogram, a.n));
  auto body = bw::convergence_json(s);
  body["group"] = bw::to_string(g);
  body["n"] = a.n;
  write_json(a.summary_out, body);
  body["command"] = "expressibility";
  body["meta"] = meta(t0);
  emit(body);
  return kExitOk;
}

struct IsingArgs {
  int n = 3;
  std::vector<double> times{0.5, 2.875, 5.25, 7.625, 10.0};
  std::uint64_t seed = 0;
  int n_reps = 3;
  bool no_refine = false;
  int jobs = 1;
  std::string out;
};

int cmd_ising_bench(const IsingArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  bw::CompileConfig cfg;
  cfg.seed = a.seed;
  const auto pts = bw::ising_adapt_benchmark(a.n, a.times, cfg, a.n_reps, !a.no_refine, a.jobs);
  write_text(a.out, bw::ising_csv(pts));
  bw::Json rows = bw::Json::array();
  bool all_converged = true;
  for (const auto& p : pts) {
    all_converged = all_converged && p.converged;
    rows.push_back({{"t", p.t},
                    {"converged", p.converged},
                    {"bricks_used", p.bricks_used},
                    {"adapt_count", p.adapt_count},
                    {"cartan_count", p.cartan_count},
                    {"final_cost", p.final_cost},
                    {"snapped_cost", p.snapped_cost}});
  }
  emit({{"command", "ising-bench"}, {"n", a.n}, {"points", rows}, {"meta", meta(t0)}});
  return all_converged ? kExitOk : kExitUnmet;
}

struct KakArgs {
  std::string kak_file;
  std::string order = "best";
  std::string out;
};

int cmd_verify_kak(const KakArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto kak = a.kak_file.empty() ? bw::default_ising_kak() : bw::kak_from_json(bw::parse_json(bw::read_text(a.kak_file)));
  if (kak.k_terms.empty() && kak.a_terms.empty()) throw std::invalid_argument("KAK data is empty");
  const int n = !kak.a_terms.empty() ? kak.a_terms.front().word.size() : kak.k_terms.front().word.size();
  const auto h = bw::ising_hamiltonian(n);
  bw::KakVerification v;
  if (a.order == "as_listed") {
    v = bw::verify_kak(h, kak, bw::ProductOrder::AsListed);
  } else if (a.order == "reversed") {
    v = bw::verify_kak(h, kak, bw::ProductOrder::Reversed);
  } else {
    v = bw::verify_kak_best(h, kak);
  }
  const bool ok = v.residual < 1e-6;
  bw::Json body{{"command", "verify-kak"},
                {"order", bw::to_string(v.order)},
                {"residual", v.residual},
                {"coefficients", v.coefficients},
                {"coefficient_error", v.coefficient_error},
                {"cartan_ppr_count", bw::cartan_ppr_count(kak)},
                {"pass", ok}};
  write_json(a.out, body);
  body["meta"] = meta(t0);
  emit(body);
  return ok ? kExitOk : kExitUnmet;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brick wall circuit templates, rank tests and variational compilation.\n\n"
               "CSV outputs:\n"
               "  compile --trace-out:      attempt,epoch,cost\n"
               "  expressibility --out:     bin_center,empirical_density,haar_density\n"
               "  ising-bench --out:        t,adapt_count,cartan_count\n"
               "Column definitions also live in schemas/csv_columns.json."};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  auto groups = CLI::IsMember({"su", "so", "sp"}, CLI::ignore_case);

  TemplateArgs ta;
  auto* tpl = app.add_subcommand("template", "Build a brick wall template and report its counts");
  tpl->add_option("--group", ta.group, "su, so or sp")->required()->check(groups);
  tpl->add_option("--n", ta.n, "Qubit count")->required()->check(CLI::Range(2, 6));
  tpl->add_flag("--ppr", ta.ppr, "Emit the Pauli product rotation form");
  tpl->add_option("--variant", ta.variant, "Three-qubit layout variant")->check(CLI::IsMember({"brickwall", "block"}));
  tpl->add_option("--out", ta.out, "Circuit JSON output path");

  RankArgs ra;
  auto* rank = app.add_subcommand("rank-test", "Jacobian rank test; exit 0 iff full rank");
  rank->add_option("--circuit", ra.circuit, "Circuit JSON file")->check(CLI::ExistingFile);
  rank->add_option("--group", ra.group, "su, so or sp")->check(groups);
  rank->add_option("--n", ra.n, "Qubit count (template mode)")->check(CLI::Range(2, 6));
  rank->add_option("--seed", ra.seed, "Master seed");
  rank->add_option("--retries", ra.retries, "Fresh samples after a deficient one")->check(CLI::NonNegativeNumber);
  rank->add_option("--rel-tol", ra.rel_tol, "Relative singular value cutoff")->check(CLI::Range(1e-16, 0.5));
  rank->add_option("--out", ra.out, "Report JSON output path");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive rank sweep over CZ placements");
  search->add_flag("--nn-only", sa.cfg.nearest_neighbour_only, "Nearest-neighbour pairs only");
  search->add_flag("--no-four-repeats", sa.cfg.forbid_four_repeats, "Drop specs with four equal consecutive pairs");
  search->add_option("--n", sa.cfg.n, "Qubit count")->check(CLI::Range(2, 4));
  search->add_option("--c", sa.cfg.c, "Number of CZ gates")->check(CLI::Range(0, 20));
  search->add_option("--seed", sa.cfg.seed, "Master seed");
  search->add_option("--retries", sa.cfg.retries, "Retries per spec")->check(CLI::NonNegativeNumber);
  search->add_option("--jobs", sa.cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", sa.out, "JSON-lines output path");
  sa.cfg.nearest_neighbour_only = false;
  sa.cfg.forbid_four_repeats = false;

  CompileArgs ca;
  auto* comp = app.add_subcommand("compile", "Variational compilation onto a template; exit 0 iff converged");
  comp->add_option("--target", ca.target, "Target matrix JSON file")->check(CLI::ExistingFile);
  comp->add_option("--haar", ca.haar, "Sample a random group element with this seed");
  comp->add_option("--group", ca.group, "su, so or sp")->check(groups);
  comp->add_option("--n", ca.n, "Qubit count")->check(CLI::Range(2, 6));
  comp->add_flag("--adaptive", ca.adaptive, "Grow the template brick by brick");
  comp->add_option("--n-reps", ca.n_reps, "Attempts per adaptive stage")->check(CLI::PositiveNumber);
  comp->add_option("--eps", ca.cfg.epsilon, "Convergence threshold")->check(CLI::PositiveNumber);
  comp->add_option("--max-attempts", ca.cfg.max_attempts, "Random restarts")->check(CLI::PositiveNumber);
  comp->add_option("--max-epochs", ca.cfg.max_epochs, "Iterations per attempt (0: 500 n)")->check(CLI::NonNegativeNumber);
  comp->add_option("--init-sigma", ca.cfg.init_sigma, "Std. dev. of initial angles")->check(CLI::PositiveNumber);
  comp->add_option("--seed", ca.cfg.seed, "Master seed");
  comp->add_option("--optimizer", ca.optimizer, "lbfgs or gd")->check(CLI::IsMember({"lbfgs", "gd"}));
  comp->add_option("--out", ca.out, "Report JSON output path");
  comp->add_option("--trace-out", ca.trace_out, "Cost trace CSV output path");

  ExprArgs ea;
  auto* expr = app.add_subcommand("expressibility", "KL expressibility of a template over several K");
  expr->add_option("--group", ea.group, "su, so or sp")->check(groups);
  expr->add_option("--n", ea.n, "Qubit count")->check(CLI::Range(2, 6));
  expr->add_option("--k-values", ea.k_values, "Comma-separated pair counts")->delimiter(',');
  expr->add_option("--seed", ea.seed, "Master seed");
  expr->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::PositiveNumber);
  expr->add_option("--out", ea.out, "Histogram CSV for the largest K");
  expr->add_option("--summary-out", ea.summary_out, "Summary JSON output path");

  IsingArgs ia;
  auto* ising = app.add_subcommand("ising-bench", "Adaptive compilation of Ising time evolution");
  ising->add_option("--n", ia.n, "Qubit count")->check(CLI::Range(2, 5));
  ising->add_option("--times", ia.times, "Comma-separated evolution times")->delimiter(',');
  ising->add_option("--seed", ia.seed, "Master seed");
  ising->add_option("--n-reps", ia.n_reps, "Attempts per adaptive stage")->check(CLI::PositiveNumber);
  ising->add_flag("--no-refine", ia.no_refine, "Skip Clifford pinning before counting");
  ising->add_option("--jobs", ia.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ising->add_option("--out", ia.out, "CSV output path");

  KakArgs ka;
  auto* kak = app.add_subcommand("verify-kak", "Check a horizontal KAK decomposition; exit 0 iff residual < 1e-6");
  kak->add_option("--kak-file", ka.kak_file, "KAK JSON file (default: built-in Ising data)")->check(CLI::ExistingFile);
  kak->add_option("--order", ka.order, "as_listed, reversed or best")
      ->check(CLI::IsMember({"as_listed", "reversed", "best"}));
  kak->add_option("--out", ka.out, "Report JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (tpl->parsed()) return cmd_template(ta);
    if (rank->parsed()) return cmd_rank_test(ra);
    if (search->parsed()) return cmd_search(sa);
    if (comp->parsed()) return cmd_compile(ca);
    if (expr->parsed()) return cmd_expressibility(ea);
    if (ising->parsed()) return cmd_ising_bench(ia);
    if (kak->parsed()) return cmd_verify_kak(ka);
  } catch (const bw::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
