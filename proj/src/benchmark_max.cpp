#include "tua/benchmark_max.hpp"

#include "tua/lp.hpp"

namespace tua {

MaxBenchResult solve_bmax(const Instance& inst, int k) {
  inst.validate();
  const SolutionVector xstar = lexmin_optimal(inst, k);

  MaxBenchResult result;
  for (int j = 0; j < inst.n; ++j)
    (xstar.x[j] == 1 ? result.j1 : result.j0).push_back(j);

  lp::Problem p;
  p.sense = lp::Sense::Maximize;
  std::vector<int> y_var(inst.m);
  for (int i = 0; i < inst.m; ++i)
    y_var[i] = p.add_variable(Rational(0), std::nullopt, std::nullopt);
  std::vector<int> z_var(inst.n, -1);
  for (int j : result.j1)
    z_var[j] = p.add_variable(Rational(1), inst.c[j], std::nullopt);

  for (int j : result.j0) {
    std::vector<Rational> row(p.num_vars(), Rational(0));
    for (int i = 0; i < inst.m; ++i) row[y_var[i]] = to_rational(inst.a[i][j]);
    p.add_row(std::move(row), lp::RowSense::LessEq, inst.c[j]);
  }
  for (int j : result.j1) {
    std::vector<Rational> row(p.num_vars(), Rational(0));
    for (int i = 0; i < inst.m; ++i) row[y_var[i]] = to_rational(inst.a[i][j]);
    row[z_var[j]] = Rational(-1);
    p.add_row(std::move(row), lp::RowSense::GreaterEq, Rational(0));
  }

  const lp::Solution sol = lp::solve(p);
  if (sol.status == lp::Status::Unbounded) {
    // The dual face of P(k) is unbounded in the b direction: P(k+1) is
    // infeasible, i.e. the monopoly-free assumption fails at level k.
    result.status = SolveStatus::Unbounded;
    return result;
  }
  if (sol.status != lp::Status::Optimal)
    throw InternalError("B_max infeasible although P(k) has an optimum");

  result.status = SolveStatus::Optimal;
  result.mu = sol.objective;
  result.y.resize(inst.m);
  for (int i = 0; i < inst.m; ++i) result.y[i] = sol.x[y_var[i]];
  result.z = inst.c;
  for (int j : result.j1) result.z[j] = sol.x[z_var[j]];
  return result;
}

Rational mu_via_phi(const PhiFunction& f, int k) {
  if (k <= 0) throw ValidationError("k must be positive");
  if (k + 1 > f.lambda_max())
    throw ValidationError("k+1 = " + std::to_string(k + 1) +
                          " is outside the feasible range of phi");
  return Rational(k) * (eval_phi(f, Rational(k + 1)) - eval_phi(f, Rational(k)));
}

PrunedInstance prune(const Instance& inst, int k) {
  if (k <= 0) throw ValidationError("k must be positive");
  const SolutionVector used = lexmin_optimal(inst, k + 1);
  PrunedInstance pr;
  for (int j = 0; j < inst.n; ++j)
    if (used.x[j] == 1) pr.parent_columns.push_back(j);
  pr.instance.m = inst.m;
  pr.instance.n = static_cast<int>(pr.parent_columns.size());
  pr.instance.b = inst.b;
  pr.instance.a.assign(inst.m, {});
  for (int i = 0; i < inst.m; ++i)
    for (int j : pr.parent_columns) pr.instance.a[i].push_back(inst.a[i][j]);
  for (int j : pr.parent_columns) {
    pr.instance.c.push_back(inst.c[j]);
    pr.instance.labels.push_back(inst.labels[j]);
  }
  pr.instance.validate();
  return pr;
}

Rational mu_tilde(const Instance& inst, int k) {
  const PrunedInstance pr = prune(inst, k);
  const MaxBenchResult lp_result = solve_bmax(pr.instance, k);
  if (lp_result.status != SolveStatus::Optimal)
    throw InternalError("B_max on the pruned instance cannot be unbounded");
  const Rational via_phi = mu_via_phi(compute_phi(pr.instance), k);
  if (lp_result.mu != via_phi)
    throw InternalError("pruned benchmark mismatch: LP gives " + to_string(lp_result.mu) +
                        ", phi formula gives " + to_string(via_phi));
  return lp_result.mu;
}

SandwichVerdict check_sandwich(const Rational& mu, const Rational& mu_tilde, int k) {
  if (mu < mu_tilde) return SandwichVerdict::ViolatedLower;
  if (mu > Rational(k + 1) * mu_tilde) return SandwichVerdict::ViolatedUpper;
  return SandwichVerdict::Holds;
}

}  // namespace tua
