// Command-line interface for the TU set-system auction toolkit.
//
// Exit codes: 0 all checks pass; 1 usage or I/O error; 2 infeasible or
// unbounded model; 3 theorem-check failure or internal inconsistency (never
// expected on TU-confirmed inputs).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tua/benchmark_max.hpp"
#include "tua/benchmark_min.hpp"
#include "tua/decompose.hpp"
#include "tua/gen.hpp"
#include "tua/instance.hpp"
#include "tua/parametric.hpp"
#include "tua/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitModel = 2;
constexpr int kExitTheorem = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_vector(const tua::Instance& inst, const std::vector<tua::Rational>& x) {
  std::ostringstream out;
  for (int j = 0; j < inst.n; ++j)
    out << (j ? " " : "") << inst.labels[j] << "=" << tua::to_string(x[j]);
  return out.str();
}

std::string support_labels(const tua::Instance& inst, const std::vector<tua::Rational>& x) {
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j < inst.n; ++j)
    if (x[j] != 0) {
      out << (first ? "" : " ") << inst.labels[j];
      first = false;
    }
  return first ? std::string("-") : out.str();
}

int cmd_solve(const std::string& path, int k) {
  const tua::Instance inst = tua::load_any(read_file(path));
  const tua::SolveResult r = tua::solve_primal(inst, tua::to_rational(k));
  if (r.status != tua::SolveStatus::Optimal) {
    std::cout << "status: infeasible\n";
    return kExitModel;
  }
  const tua::SolutionVector xstar = tua::lexmin_optimal(inst, k);
  std::cout << "status: optimal\n";
  std::cout << "phi: " << tua::to_string(r.objective) << "\n";
  std::cout << "x_star: " << format_vector(inst, xstar.x) << "\n";
  std::cout << "winners: " << support_labels(inst, xstar.x) << "\n";
  std::cout << "dual_y:";
  for (const auto& y : r.certificate.y) std::cout << " " << tua::to_string(y);
  std::cout << "\n";
  std::cout << "certificate: "
            << (tua::verify_optimality(inst, tua::Rational(k), r.x, r.certificate)
                    ? "verified"
                    : "FAILED")
            << "\n";
  return kExitOk;
}

int cmd_phi(const std::string& path) {
  const tua::Instance inst = tua::load_any(read_file(path));
  const tua::PhiFunction f = tua::compute_phi(inst);
  const auto [lo, hi] = tua::feasible_range(f);
  std::cout << "feasible_range: [" << lo << ", " << hi << "]\n";
  std::cout << "segments: " << f.segments() << "\n";
  for (int i = 0; i < f.segments(); ++i) {
    std::cout << "segment " << i + 1 << ": [" << f.breakpoints[i] << ", "
              << f.breakpoints[i + 1] << "] slope " << tua::to_string(f.slopes[i])
              << " intercept " << tua::to_string(f.intercepts[i]) << "\n";
  }
  std::cout << "phi_grid:";
  for (long long k = lo; k <= hi; ++k)
    std::cout << " " << tua::to_string(tua::eval_phi(f, tua::to_rational(k)));
  std::cout << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& path, int k, const std::string& bits) {
  const tua::Instance inst = tua::load_any(read_file(path));
  tua::SolutionVector xbar;
  if (bits.empty()) {
    xbar = tua::lexmin_optimal(inst, k);
  } else {
    std::vector<tua::Rational> x;
    std::istringstream in(bits);
    std::string tok;
    while (std::getline(in, tok, ',')) x.push_back(tua::parse_rational(tok));
    xbar = tua::SolutionVector::from(std::move(x));
  }
  const tua::Decomposition d = tua::decompose(inst, xbar, k);
  std::cout << "input: " << support_labels(inst, xbar.x) << "\n";
  std::cout << "pieces: " << d.pieces.size() << "\n";
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    std::cout << "piece " << i + 1 << ": " << support_labels(inst, d.pieces[i].x)
              << " cost " << tua::to_string(inst.cost_of(d.pieces[i].x)) << "\n";
  std::cout << "delta: " << tua::to_string(d.delta) << "\n";
  std::cout << "verified: " << (tua::verify_decomposition(inst, xbar, d) ? "yes" : "NO")
            << "\n";
  return kExitOk;
}

int cmd_bench_max(const std::string& path, int k, bool pruned) {
  tua::Instance inst = tua::load_any(read_file(path));
  if (pruned) {
    const tua::PrunedInstance pr = tua::prune(inst, k);
    std::cout << "pruned_columns: " << support_labels(inst, [&] {
      std::vector<tua::Rational> mark(inst.n, tua::Rational(0));
      for (int j : pr.parent_columns) mark[j] = 1;
      return mark;
    }()) << "\n";
    inst = pr.instance;
  }
  const tua::MaxBenchResult r = tua::solve_bmax(inst, k);
  if (r.status == tua::SolveStatus::Unbounded) {
    std::cout << "status: unbounded (P(" << k + 1
              << ") infeasible; monopoly assumption violated)\n";
    return kExitModel;
  }
  std::cout << "status: optimal\n";
  std::cout << "mu: " << tua::to_string(r.mu) << "\n";
  std::cout << "z: " << format_vector(inst, r.z) << "\n";
  std::cout << "y:";
  for (const auto& y : r.y) std::cout << " " << tua::to_string(y);
  std::cout << "\n";
  const tua::Rational via_phi = tua::mu_via_phi(tua::compute_phi(inst), k);
  std::cout << "mu_via_phi: " << tua::to_string(via_phi) << "\n";
  if (via_phi != r.mu) {
    std::cout << "theorem1: FAILED\n";
    return kExitTheorem;
  }
  std::cout << "theorem1: pass\n";
  return kExitOk;
}

int cmd_bench_min(const std::string& path, int k) {
  const tua::Instance inst = tua::load_any(read_file(path));
  const tua::MinBenchResult r = tua::nu_bruteforce(inst, k);
  std::cout << "nu: " << tua::to_string(r.nu) << "\n";
  std::cout << "z: " << format_vector(inst, r.z.z) << "\n";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    std::cout << "witness " << inst.labels[r.witness_columns[i]] << ": "
              << support_labels(inst, r.witnesses[i].x) << "\n";
  const tua::Rational gamma = tua::gamma_star(inst, k);
  std::cout << "gamma: " << tua::to_string(gamma) << "\n";
  if (tua::check_minbench_bound(r.nu, gamma, k) != tua::BoundVerdict::Holds) {
    std::cout << "theorem3: FAILED\n";
    return kExitTheorem;
  }
  std::cout << "theorem3: pass\n";
  return kExitOk;
}

int cmd_check_tu(const std::string& path, int limit) {
  const tua::Instance inst = tua::load_any(read_file(path));
  const tua::TuResult r = tua::check_totally_unimodular(inst, limit);
  switch (r.verdict) {
    case tua::TuVerdict::Confirmed:
      std::cout << "verdict: confirmed\n";
      if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
      return kExitOk;
    case tua::TuVerdict::Skipped:
      std::cout << "verdict: skipped\nnote: " << r.note << "\n";
      return kExitOk;
    case tua::TuVerdict::Refuted: {
      std::cout << "verdict: refuted\ndeterminant: " << r.witness_det << "\nrows:";
      for (int i : r.witness_rows) std::cout << " " << i + 1;
      std::cout << "\ncols:";
      for (int j : r.witness_cols)
        std::cout << " " << (j < inst.n ? inst.labels[j] : std::string("b"));
      std::cout << "\n";
      return kExitModel;
    }
  }
  return kExitOk;
}

int cmd_check_monopoly(const std::string& path, int k) {
  const tua::Instance inst = tua::load_any(read_file(path));
  const tua::MonopolyResult r = tua::check_monopoly_free(inst, k);
  if (!r.monopoly_free) {
    std::cout << "verdict: no\nfailing_column: " << inst.labels[r.failing_column]
              << "\n";
    return kExitModel;
  }
  std::cout << "verdict: yes\n";
  for (int j = 0; j < inst.n; ++j)
    std::cout << "witness " << inst.labels[j] << ": "
              << support_labels(inst, r.witnesses[j].x) << "\n";
  return kExitOk;
}

int cmd_gen(const std::string& preset, bool random, int nodes, int edges,
            int cost_bound, std::uint64_t seed, const std::string& out_path) {
  tua::KFlowGraph g;
  if (random)
    g = tua::random_kflow(nodes, edges, cost_bound, seed);
  else
    g = tua::preset_kflow(preset);
  const std::string text = tua::save_instance(tua::kflow_instance(g));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitOk;
}

class CheckList {
 public:
  void record(const std::string& name, bool ok) {
    std::cout << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    all_ok_ &= ok;
  }
  void skip(const std::string& name, const std::string& reason) {
    std::cout << "  " << name << ": skipped (" << reason << ")\n";
  }
  bool all_ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

int cmd_verify(const std::string& path, int kmax, int cap) {
  const tua::Instance inst = tua::load_any(read_file(path));
  std::cout << "instance: " << path << "\n";
  const tua::PhiFunction phi = tua::compute_phi(inst);
  const long long lambda_max = phi.lambda_max();
  std::cout << "phi_range: [0, " << lambda_max << "]\n";
  std::cout << "phi_grid:";
  for (long long v = 0; v <= lambda_max; ++v)
    std::cout << " " << tua::to_string(tua::eval_phi(phi, tua::to_rational(v)));
  std::cout << "\n";

  CheckList checks;
  for (int k = 1; k <= kmax; ++k) {
    std::cout << "k: " << k << "\n";
    if (k > lambda_max) {
      checks.skip("all", "P(" + std::to_string(k) + ") infeasible");
      continue;
    }
    const tua::SolveResult sr = tua::solve_primal(inst, tua::to_rational(k));
    checks.record("certificate",
                  tua::verify_optimality(inst, tua::Rational(k), sr.x, sr.certificate));
    checks.record("phi_solver_agreement",
                  sr.objective == tua::eval_phi(phi, tua::to_rational(k)));

    const tua::SolutionVector xstar = tua::lexmin_optimal(inst, k);
    std::cout << "  x_star: " << support_labels(inst, xstar.x) << "\n";
    const tua::Decomposition dk = tua::decompose(inst, xstar, k);
    checks.record("prop1_decomposition", tua::verify_decomposition(inst, xstar, dk));

    const tua::MonopolyResult mono = tua::check_monopoly_free(inst, k);
    std::cout << "  monopoly_free: "
              << (mono.monopoly_free ? "yes"
                                     : "no (" + inst.labels[mono.failing_column] + ")")
              << "\n";
    if (mono.monopoly_free)
      checks.record("prop2_next_level_feasible", k + 1 <= lambda_max);

    if (k + 1 <= lambda_max) {
      const tua::MaxBenchResult bm = tua::solve_bmax(inst, k);
      checks.record("bmax_bounded", bm.status == tua::SolveStatus::Optimal);
      if (bm.status == tua::SolveStatus::Optimal) {
        const tua::Rational via_phi = tua::mu_via_phi(phi, k);
        std::cout << "  mu_lp: " << tua::to_string(bm.mu)
                  << "  mu_phi: " << tua::to_string(via_phi) << "\n";
        checks.record("theorem1_identity", bm.mu == via_phi);

        const tua::Rational mt = tua::mu_tilde(inst, k);
        std::cout << "  mu_tilde: " << tua::to_string(mt) << "\n";
        checks.record("theorem2_sandwich", tua::check_sandwich(bm.mu, mt, k) ==
                                               tua::SandwichVerdict::Holds);
        const tua::SolutionVector xnext = tua::lexmin_optimal(inst, k + 1);
        const tua::Decomposition dnext = tua::decompose(inst, xnext, k + 1);
        std::cout << "  delta: " << tua::to_string(dnext.delta) << "\n";
        const tua::Rational phi_next = tua::eval_phi(phi, tua::Rational(k + 1));
        const bool chain = mt >= tua::Rational(k) * dnext.delta &&
                           tua::Rational(k) * dnext.delta >=
                               tua::Rational(k) * phi_next / tua::Rational(k + 1) &&
                           tua::Rational(k) * phi_next / tua::Rational(k + 1) >=
                               bm.mu / tua::Rational(k + 1);
        checks.record("theorem2_chain", chain);
      }
    } else {
      checks.skip("benchmarks", "P(" + std::to_string(k + 1) +
                                    ") infeasible; monopoly assumption violated");
    }

    if (inst.n <= cap) {
      try {
        const tua::MinBenchResult nb = tua::nu_bruteforce(inst, k, cap);
        const tua::Rational gamma = tua::gamma_star(inst, k, cap);
        std::cout << "  nu: " << tua::to_string(nb.nu)
                  << "  gamma: " << tua::to_string(gamma) << "\n";
        checks.record("theorem3_bound", tua::check_minbench_bound(nb.nu, gamma, k) ==
                                            tua::BoundVerdict::Holds);
      } catch (const tua::InfeasibleError& e) {
        checks.skip("theorem3_bound", e.what());
      }
    } else {
      checks.skip("theorem3_bound", "instance exceeds the enumeration cap");
    }

    try {
      const auto pieces = tua::construct_shared_optima(inst, k);
      const tua::Rational phi_1 = tua::eval_phi(phi, tua::Rational(1));
      bool ok = static_cast<int>(pieces.size()) == k + 1;
      for (const auto& piece : pieces) ok &= inst.cost_of(piece.x) == phi_1;
      ok &= tua::eval_phi(phi, tua::Rational(k + 1)) == tua::Rational(k + 1) * phi_1;
      checks.record("prop4_shared_optima", ok);
    } catch (const tua::PremiseError& e) {
      checks.skip("prop4_shared_optima", e.what());
    }
  }
  std::cout << "result: " << (checks.all_ok() ? "all-pass" : "FAILURES") << "\n";
  return checks.all_ok() ? kExitOk : kExitTheorem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TU set-system auction toolkit"};
  app.require_subcommand(1);

  std::string instance_path, bits, preset, out_path;
  int k = 1, kmax = 1, limit = 6, nodes = 5, edges = 8, cost_bound = 10, cap = 20;
  std::uint64_t seed = 1;
  bool pruned = false, random = false;

  auto* solve = app.add_subcommand("solve", "solve P(k) with certificate");
  solve->add_option("--instance", instance_path)->required();
  solve->add_option("--k", k)->required();

  auto* phi = app.add_subcommand("phi", "piecewise-linear value function");
  phi->add_option("--instance", instance_path)->required();

  auto* dec = app.add_subcommand("decompose", "split a level-k solution into units");
  dec->add_option("--instance", instance_path)->required();
  dec->add_option("--k", k)->required();
  dec->add_option("--x", bits, "comma-separated binary vector (default: optimum)");

  auto* bench = app.add_subcommand("bench", "benchmark problems");
  bench->require_subcommand(1);
  auto* bmax = bench->add_subcommand("max", "max benchmark mu(k)");
  bmax->add_option("--instance", instance_path)->required();
  bmax->add_option("--k", k)->required();
  bmax->add_flag("--pruned", pruned);
  auto* bmin = bench->add_subcommand("min", "min benchmark nu(k)");
  bmin->add_option("--instance", instance_path)->required();
  bmin->add_option("--k", k)->required();

  auto* verify = app.add_subcommand("verify", "run every theorem check");
  verify->add_option("--instance", instance_path)->required();
  verify->add_option("--kmax", kmax)->required();
  verify->add_option("--cap", cap, "enumeration cap for the min benchmark");

  auto* check = app.add_subcommand("check", "assumption audits");
  check->require_subcommand(1);
  auto* tu = check->add_subcommand("tu", "submatrix determinant audit");
  tu->add_option("--instance", instance_path)->required();
  tu->add_option("--limit", limit);
  auto* mono = check->add_subcommand("monopoly", "per-column avoidability");
  mono->add_option("--instance", instance_path)->required();
  mono->add_option("--k", k)->required();

  auto* gen = app.add_subcommand("gen", "emit fixture or random instances");
  gen->add_option("--preset", preset, "d1, d2, d3, or d4");
  gen->add_flag("--random", random);
  gen->add_option("--nodes", nodes);
  gen->add_option("--edges", edges);
  gen->add_option("--cost-bound", cost_bound);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, k);
    if (phi->parsed()) return cmd_phi(instance_path);
    if (dec->parsed()) return cmd_decompose(instance_path, k, bits);
    if (bmax->parsed()) return cmd_bench_max(instance_path, k, pruned);
    if (bmin->parsed()) return cmd_bench_min(instance_path, k);
    if (verify->parsed()) return cmd_verify(instance_path, kmax, cap);
    if (tu->parsed()) return cmd_check_tu(instance_path, limit);
    if (mono->parsed()) return cmd_check_monopoly(instance_path, k);
    if (gen->parsed()) {
      if (random == !preset.empty()) {
        std::cerr << "error: pass exactly one of --preset or --random\n";
        return kExitUsage;
      }
      return cmd_gen(preset, random, nodes, edges, cost_bound, seed, out_path);
    }
  } catch (const tua::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tua::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tua::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitModel;
  } catch (const tua::UnboundedError& e) {
    std::cerr << "unbounded: " << e.what() << "\n";
    return kExitModel;
  } catch (const tua::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitTheorem;
  }
  return kExitUsage;
}
