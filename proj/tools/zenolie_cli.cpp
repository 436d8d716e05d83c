// Copyright 2026 The Zenolie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: closure reports, Zeno experiments, purification,
// damping simulations and the full reproduction suite.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zenolie/dissipation.hpp"
#include "zenolie/errors.hpp"
#include "zenolie/lie.hpp"
#include "zenolie/models.hpp"
#include "zenolie/paper_suite.hpp"
#include "zenolie/pauli_io.hpp"
#include "zenolie/purification.hpp"
#include "zenolie/report.hpp"
#include "zenolie/zeno.hpp"

namespace {

using namespace zenolie;

struct RunConfig {
  double tol = kDefaultRankTol;
  std::uint64_t seed = 20140101;
  std::string format = "text";
  std::string out;
  std::size_t workers = 0;
};

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty())
    std::cout << content;
  else
    write_file_atomic(cfg.out, content);
}

std::string render(const RunConfig& cfg, const Record& rec) {
  if (cfg.format == "json") return rec.to_json();
  if (cfg.format == "csv") return to_csv({rec});
  return rec.to_text();
}

std::string render_table(const RunConfig& cfg, const std::vector<Record>& rows) {
  if (cfg.format == "json") return to_json_array(rows);
  return to_csv(rows);
}

std::string summary_comment(const Record& r) {
  std::string s = "# summary:";
  for (const auto& [k, v] : r.fields()) s += " " + k + "=" + render_value(v);
  return s + "\n";
}

std::string json_join(std::initializer_list<std::pair<const char*, std::string>> parts) {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : parts) j[k] = nlohmann::ordered_json::parse(v);
  return j.dump(2) + "\n";
}

int run_closure(const RunConfig& cfg, const std::vector<std::string>& inputs,
                const std::string& project) {
  std::vector<DenseOperator> hs;
  std::size_t n = 0;
  for (const auto& path : inputs) {
    const PauliSum op = parse_pauli_file(path);
    if (n != 0 && op.n_qubits() != n)
      throw DimensionError("input files disagree on the qubit count");
    n = op.n_qubits();
    hs.push_back(to_dense(op));
  }
  if (!project.empty()) {
    const Projection p = parse_projection_spec(project, n);
    for (auto& h : hs) h = p.compress(h);
  }
  const auto result = hamiltonian_closure(hs, cfg.tol);
  Record rec;
  rec.set("generators", hs.size())
      .set("operator_dim", static_cast<std::size_t>(result.basis.dim_space()))
      .set("projection", project.empty() ? std::string("none") : project);
  const Record closure_fields = to_record(result.report);
  for (const auto& [k, v] : closure_fields.fields()) rec.set(k, v);
  emit(cfg, render(cfg, rec));
  return 0;
}

int run_zeno(const RunConfig& cfg, const std::string& model_name) {
  const ModelSpec m = model_by_name(model_name);
  const auto hs = m.dense_hamiltonians();
  const auto sys = make_zeno_system(hs, m.projection());
  const auto naked = hamiltonian_closure(hs, cfg.tol).report;
  const auto zeno = hamiltonian_closure(sys.compressed_hamiltonians, cfg.tol).report;
  double max_comm = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      max_comm = std::max(max_comm, commutator(hs[i], hs[j]).norm());
  const bool ok = naked.dimension == m.expected_naked_dim &&
                  zeno.traceless_dimension == m.expected_zeno_dim;
  Record rec;
  rec.set("model", m.name)
      .set("n_qubits", m.n_qubits)
      .set("projection", m.projection_spec)
      .set("max_commutator_norm", Record::Value(max_comm))
      .set("naked_dim", naked.dimension)
      .set("naked_traceless_dim", naked.traceless_dimension)
      .set("zeno_dim", zeno.dimension)
      .set("zeno_traceless_dim", zeno.traceless_dimension)
      .set("zeno_is_full_su", Record::Value(zeno.is_full_su))
      .set("expected_naked_dim", m.expected_naked_dim)
      .set("expected_zeno_dim", m.expected_zeno_dim)
      .set("passed", Record::Value(ok));
  emit(cfg, render(cfg, rec));
  return ok ? 0 : 1;
}

int run_convergence(const RunConfig& cfg, const std::string& model_name, double t,
                    const std::vector<std::size_t>& ms, std::size_t which) {
  const ModelSpec m = model_by_name(model_name);
  if (which < 1 || which > m.hamiltonians.size())
    throw ContractViolation("--hamiltonian must be between 1 and " +
                            std::to_string(m.hamiltonians.size()));
  const auto pts = zeno_convergence(to_dense(m.hamiltonians[which - 1]), m.projection(), t, ms);
  std::vector<Record> rows;
  for (const auto& p : pts) {
    Record r;
    r.set("m", p.m)
        .set("error", Record::Value(p.error))
        .set("survival_probability", Record::Value(p.survival_probability));
    rows.push_back(std::move(r));
  }
  emit(cfg, render_table(cfg, rows));
  return 0;
}

int run_damping(const RunConfig& cfg, double gamma, double t, std::size_t steps,
                std::size_t samples, const std::string& model_name,
                const std::vector<double>& ladder) {
  const ModelSpec m = model_by_name(model_name);
  const std::size_t n = m.n_qubits;
  const Eigen::Index d = Eigen::Index{1} << n;

  // Qubit 1 starts in |phi_perp>, the rest in |0...0>.
  StateVector rest = StateVector::Zero(d / 2);
  rest(0) = 1.0;
  const StateVector psi = kron(phi_perp_state(), rest);
  const StateVector phi = phi_state();
  // Row k sits at the step nearest k * steps / samples, k = 0..samples.
  const std::size_t rows = std::max<std::size_t>(1, samples);
  auto target = [&](std::size_t k) { return (k * steps + rows / 2) / rows; };
  std::vector<Record> series;
  std::size_t step = 0;
  std::size_t next = 0;
  auto observe = [&](double time, const DenseOperator& rho) {
    const std::size_t s = step++;
    if (next > rows || s != target(next)) return;
    while (next <= rows && target(next) == s) ++next;
    const DenseOperator q1 = reduced_qubit_operator(rho, 1, n);
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(0.5 * (rho + rho.adjoint()),
                                                    Eigen::EigenvaluesOnly);
    Record r;
    r.set("t", Record::Value(time))
        .set("fidelity_to_phi", Record::Value((phi.adjoint() * q1 * phi)(0).real()))
        .set("trace", Record::Value(rho.trace().real()))
        .set("min_eigenvalue", Record::Value(es.eigenvalues()(0)));
    series.push_back(std::move(r));
  };
  evolve_lindblad(amplitude_damping_model(1, n, gamma), DensityMatrix::pure(psi), t, steps,
                  observe);

  std::vector<Record> table;
  if (!ladder.empty()) {
    // Zeno target: qubit 1 in |phi>, qubits 2.. in |0..01>.
    StateVector rest1 = StateVector::Zero(d / 2);
    rest1(1) = 1.0;
    StrongDampingOptions opts;
    opts.workers = cfg.workers;
    const auto pts = strong_damping_zeno_check(to_dense(m.hamiltonians.back()), 1,
                                               DensityMatrix::pure(kron(phi, rest1)), t,
                                               ladder, opts);
    for (const auto& p : pts) {
      Record r;
      r.set("gamma", Record::Value(p.gamma)).set("trace_distance", Record::Value(p.trace_distance));
      table.push_back(std::move(r));
    }
  }
  if (cfg.format == "json") {
    emit(cfg, table.empty() ? json_join({{"series", to_json_array(series)}})
                            : json_join({{"series", to_json_array(series)},
                                         {"ladder", to_json_array(table)}}));
  } else {
    std::string content = to_csv(series);
    if (!table.empty()) content += "\n" + to_csv(table);
    emit(cfg, content);
  }
  return 0;
}

int run_genericity(const RunConfig& cfg, std::size_t n, std::size_t trials, bool haar) {
  GenericityOptions opts;
  opts.haar_projection = haar;
  opts.workers = cfg.workers;
  const auto s = genericity_sweep(n, trials, cfg.seed, cfg.tol, opts);
  std::vector<Record> rows;
  for (const auto& t : s.trials) {
    Record r;
    r.set("trial", t.trial)
        .set("seed", std::to_string(t.seed))
        .set("zeno_dim", t.zeno_dim)
        .set("is_full", Record::Value(t.is_full))
        .set("smallest_singular_value", Record::Value(t.smallest_singular_value));
    rows.push_back(std::move(r));
  }
  Record summary;
  summary.set("full_count", s.full_count)
      .set("total", s.total)
      .set("min_smallest_singular_value", Record::Value(s.min_smallest_singular_value))
      .set("min_accepted_residual", Record::Value(s.min_accepted_residual));
  if (cfg.format == "json")
    emit(cfg, json_join({{"trials", to_json_array(rows)}, {"summary", summary.to_json()}}));
  else
    emit(cfg, to_csv(rows) + summary_comment(summary));
  return 0;
}

int run_purify(const RunConfig& cfg, const std::string& h1_path, const std::string& h2_path,
               const std::string& out_h1, const std::string& out_h2) {
  const PauliSum h1 = parse_pauli_file(h1_path);
  const PauliSum h2 = parse_pauli_file(h2_path);
  const auto [big1, big2] = purify_pair(h1, h2);
  const auto pair = purify_pair(to_dense(h1), to_dense(h2));
  const auto rep = verify_purification(pair);
  const auto contrast = closure_contrast(pair, cfg.tol);
  const bool ok = rep.commutator_norm <= 1e-11 && rep.recovery_error_1 <= 1e-12 &&
                  rep.recovery_error_2 <= 1e-12;
  Record rec;
  rec.set("commutator_norm", Record::Value(rep.commutator_norm))
      .set("recovery_error_1", Record::Value(rep.recovery_error_1))
      .set("recovery_error_2", Record::Value(rep.recovery_error_2))
      .set("dim_original", contrast.dim_original)
      .set("dim_purified", contrast.dim_purified)
      .set("passed", Record::Value(ok));

  const std::string t1 = write_pauli_text(big1);
  const std::string t2 = write_pauli_text(big2);
  if (!out_h1.empty()) write_file_atomic(out_h1, t1);
  if (!out_h2.empty()) write_file_atomic(out_h2, t2);
  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(rec.to_json());
    j["H1"] = t1;
    j["H2"] = t2;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::string content = render(cfg, rec);
    if (out_h1.empty()) content += "# purified H1\n" + t1;
    if (out_h2.empty()) content += "# purified H2\n" + t2;
    emit(cfg, content);
  }
  return ok ? 0 : 1;
}

int run_suite(const RunConfig& cfg, std::size_t trials) {
  SuiteConfig sc;
  sc.tol = cfg.tol;
  sc.seed = cfg.seed;
  sc.genericity_trials = trials;
  sc.workers = cfg.workers;
  const SuiteReport rep = run_paper_suite(sc);
  emit(cfg, cfg.format == "json" ? rep.to_json() : rep.to_text());
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical Lie algebras of controlled and Zeno-projected quantum systems"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  auto* tol_opt = app.add_option("--tol", cfg.tol, "Relative rank tolerance in (0, 1)");
  tol_opt->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", cfg.seed, "Base RNG seed");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "Write output here (atomically) instead of stdout");
  app.add_option("--workers", cfg.workers, "Worker threads for sweeps (0 = all cores)");

  std::vector<std::string> inputs;
  std::string project;
  auto* closure = app.add_subcommand("closure", "Lie closure of Hamiltonians read from files");
  closure->add_option("--input", inputs, "Pauli-sum file (repeatable)")->required();
  closure->add_option("--project", project, "Projector, e.g. phi:1 or phi:1*phi:3");

  std::string model = "intro";
  auto* zeno = app.add_subcommand("zeno", "Naked and Zeno closure dimensions of a model");
  zeno->add_option("--model", model, "intro, a:<n> or b:<n>");

  std::string conv_model = "a:3";
  double conv_t = 1.0;
  std::vector<std::size_t> ms{8, 16, 32, 64, 128, 256};
  std::size_t which = 0;
  auto* conv = app.add_subcommand("convergence", "Repeated-projection error against the Zeno limit");
  conv->add_option("--model", conv_model);
  conv->add_option("--t", conv_t, "Total evolution time");
  conv->add_option("--m", ms, "Comma-separated projection counts")->delimiter(',');
  conv->add_option("--hamiltonian", which, "1-based Hamiltonian index (default: last)");

  double gamma = 1.0;
  double damp_t = 5.0;
  std::size_t steps = 2000;
  std::size_t samples = 50;
  std::string damp_model = "a:3";
  std::vector<double> ladder;
  auto* damping = app.add_subcommand("damping", "Amplitude damping of qubit 1 toward |phi>");
  damping->add_option("--gamma", gamma)->check(CLI::NonNegativeNumber);
  damping->add_option("--t", damp_t);
  damping->add_option("--steps", steps)->check(CLI::PositiveNumber);
  damping->add_option("--samples", samples, "Rows in the time series");
  damping->add_option("--model", damp_model, "Model supplying the qubit count and H");
  damping->add_option("--ladder", ladder, "Comma-separated rates for the Zeno ladder table")
      ->delimiter(',');

  std::size_t gen_n = 3;
  std::size_t trials = 50;
  bool haar = false;
  auto* gen = app.add_subcommand("genericity", "Random commuting pairs under a Zeno projection");
  gen->add_option("--n", gen_n, "Qubits");
  gen->add_option("--trials", trials)->check(CLI::PositiveNumber);
  gen->add_flag("--haar-projection", haar, "Use a Haar-random rank-d/2 projection");

  std::string h1_path;
  std::string h2_path;
  std::string out_h1;
  std::string out_h2;
  auto* purify = app.add_subcommand("purify", "Commuting purification of a Hamiltonian pair");
  purify->add_option("--h1", h1_path)->required();
  purify->add_option("--h2", h2_path)->required();
  purify->add_option("--out-h1", out_h1, "Write the extended H1 here");
  purify->add_option("--out-h2", out_h2, "Write the extended H2 here");

  std::size_t suite_trials = 50;
  auto* suite = app.add_subcommand("paper-suite", "Run every reproduction check");
  suite->add_option("--trials", suite_trials, "Genericity trials")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (closure->parsed()) return run_closure(cfg, inputs, project);
    if (zeno->parsed()) return run_zeno(cfg, model);
    if (conv->parsed())
      return run_convergence(cfg, conv_model, conv_t, ms,
                             which == 0 ? model_by_name(conv_model).hamiltonians.size() : which);
    if (damping->parsed())
      return run_damping(cfg, gamma, damp_t, steps, samples, damp_model, ladder);
    if (gen->parsed()) return run_genericity(cfg, gen_n, trials, haar);
    if (purify->parsed()) return run_purify(cfg, h1_path, h2_path, out_h1, out_h2);
    if (suite->parsed()) return run_suite(cfg, suite_trials);
  } catch (const zenolie::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
