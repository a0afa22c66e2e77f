#include "tua/solver.hpp"

#include <algorithm>
#include <cstdint>

#include "tua/lp.hpp"

namespace tua {
namespace {

lp::Problem primal_problem(const Instance& inst, const Rational& lambda,
                           const std::vector<Rational>& upper) {
  lp::Problem p;
  for (int j = 0; j < inst.n; ++j)
    p.add_variable(inst.c[j], Rational(0), upper[j]);
  for (int i = 0; i < inst.m; ++i) {
    std::vector<Rational> row(inst.n);
    for (int j = 0; j < inst.n; ++j) row[j] = to_rational(inst.a[i][j]);
    p.add_row(std::move(row), lp::RowSense::Equal, lambda * to_rational(inst.b[i]));
  }
  return p;
}

// Complementary-slackness check for a box [0, u] with u in {0, 1}.  A column
// pinned by u_j = 0 carries no sign condition and contributes nothing to the
// value identity, so this reduces to verify_optimality when u = 1.
bool verify_with_bounds(const Instance& inst, const Rational& lambda,
                        const std::vector<Rational>& upper, const SolutionVector& x,
                        const DualCertificate& cert) {
  if (static_cast<int>(x.x.size()) != inst.n) return false;
  if (static_cast<int>(cert.y.size()) != inst.m) return false;
  for (int j = 0; j < inst.n; ++j)
    if (x.x[j] < 0 || x.x[j] > upper[j]) return false;
  const std::vector<Rational> ax = inst.apply(x.x);
  for (int i = 0; i < inst.m; ++i)
    if (ax[i] != lambda * to_rational(inst.b[i])) return false;

  Rational slack_sum(0);
  for (int j = 0; j < inst.n; ++j) {
    Rational ya(0);
    for (int i = 0; i < inst.m; ++i)
      if (inst.a[i][j] != 0) ya += cert.y[i] * to_rational(inst.a[i][j]);
    if (upper[j] == 0) continue;
    if (x.x[j] == 0) {
      if (ya > inst.c[j]) return false;
    } else if (x.x[j] == upper[j]) {
      if (ya < inst.c[j]) return false;
      slack_sum += upper[j] * (inst.c[j] - ya);
    } else {
      if (ya != inst.c[j]) return false;
    }
  }

  Rational yb(0);
  for (int i = 0; i < inst.m; ++i)
    if (inst.b[i] != 0) yb += cert.y[i] * to_rational(inst.b[i]);
  return inst.cost_of(x.x) == lambda * yb + slack_sum;
}

SolveResult solve_with_bounds(const Instance& inst, const Rational& lambda,
                              const std::vector<Rational>& upper) {
  inst.validate();
  if (lambda < 0) throw ValidationError("lambda must be nonnegative");
  const lp::Solution sol = lp::solve(primal_problem(inst, lambda, upper));
  SolveResult result;
  if (sol.status == lp::Status::Infeasible) {
    result.status = SolveStatus::Infeasible;
    return result;
  }
  if (sol.status == lp::Status::Unbounded)
    throw InternalError("P(lambda) reported unbounded on a box slice");
  result.status = SolveStatus::Optimal;
  result.x = SolutionVector::from(sol.x);
  result.objective = sol.objective;
  result.certificate.y = sol.duals;
  for (int j = 0; j < inst.n; ++j) {
    if (sol.x[j] == 0)
      result.certificate.j0.push_back(j);
    else if (sol.x[j] == 1)
      result.certificate.j1.push_back(j);
    else
      result.certificate.jf.push_back(j);
  }
  if (!verify_with_bounds(inst, lambda, upper, result.x, result.certificate))
    throw InternalError("simplex produced a solution its own certificate rejects");
  return result;
}

}  // namespace

SolutionVector SolutionVector::from(std::vector<Rational> values) {
  SolutionVector s;
  s.binary = is_binary_vector(values);
  s.x = std::move(values);
  return s;
}

SolveResult solve_primal(const Instance& inst, const Rational& lambda) {
  return solve_with_bounds(inst, lambda,
                           std::vector<Rational>(inst.n, Rational(1)));
}

SolveResult solve_primal_restricted(const Instance& inst, const Rational& lambda,
                                    const std::vector<Rational>& upper) {
  return solve_with_bounds(inst, lambda, upper);
}

SolutionVector lexmin_optimal(const Instance& inst, int k) {
  if (k <= 0) throw ValidationError("k must be positive");
  const SolveResult base = solve_primal(inst, Rational(k));
  if (base.status != SolveStatus::Optimal)
    throw InfeasibleError("P(" + std::to_string(k) + ") is infeasible");
  const Rational phi = base.objective;

  std::vector<std::optional<Rational>> fixed(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    lp::Problem p;
    p.sense = lp::Sense::Maximize;
    for (int col = 0; col < inst.n; ++col) {
      const Rational lo = fixed[col] ? *fixed[col] : Rational(0);
      const Rational hi = fixed[col] ? *fixed[col] : Rational(1);
      p.add_variable(col == j ? Rational(1) : Rational(0), lo, hi);
    }
    for (int i = 0; i < inst.m; ++i) {
      std::vector<Rational> row(inst.n);
      for (int col = 0; col < inst.n; ++col) row[col] = to_rational(inst.a[i][col]);
      p.add_row(std::move(row), lp::RowSense::Equal, Rational(k) * to_rational(inst.b[i]));
    }
    p.add_row(inst.c, lp::RowSense::Equal, phi);  // stay on the optimal face
    const lp::Solution sol = lp::solve(p);
    if (sol.status != lp::Status::Optimal)
      throw InternalError("optimal face restriction became infeasible");
    if (sol.objective != 0 && sol.objective != 1)
      throw InternalError("non-integral coordinate extremum on the optimal face");
    fixed[j] = sol.objective;
  }

  std::vector<Rational> x(inst.n);
  for (int j = 0; j < inst.n; ++j) x[j] = *fixed[j];
  SolutionVector result = SolutionVector::from(std::move(x));
  if (!result.binary || inst.cost_of(result.x) != phi)
    throw InternalError("tie-break produced a non-optimal or non-binary point");
  return result;
}

bool verify_optimality(const Instance& inst, const Rational& lambda,
                       const SolutionVector& x, const DualCertificate& cert) {
  if (static_cast<int>(x.x.size()) != inst.n) return false;
  if (static_cast<int>(cert.y.size()) != inst.m) return false;
  for (const auto& v : x.x)
    if (v < 0 || v > 1) return false;
  const std::vector<Rational> ax = inst.apply(x.x);
  for (int i = 0; i < inst.m; ++i)
    if (ax[i] != lambda * to_rational(inst.b[i])) return false;

  auto y_dot_col = [&](int j) {
    Rational v(0);
    for (int i = 0; i < inst.m; ++i)
      if (inst.a[i][j] != 0) v += cert.y[i] * to_rational(inst.a[i][j]);
    return v;
  };

  Rational slack_sum(0);  // (c_{J1} - y A_{J1}).1 for the induced partition
  for (int j = 0; j < inst.n; ++j) {
    const Rational ya = y_dot_col(j);
    if (x.x[j] == 0) {
      if (ya > inst.c[j]) return false;
    } else if (x.x[j] == 1) {
      if (ya < inst.c[j]) return false;
      slack_sum += inst.c[j] - ya;
    } else {
      if (ya != inst.c[j]) return false;
    }
  }

  Rational yb(0);
  for (int i = 0; i < inst.m; ++i)
    if (inst.b[i] != 0) yb += cert.y[i] * to_rational(inst.b[i]);
  return inst.cost_of(x.x) == lambda * yb + slack_sum;
}

std::vector<SolutionVector> enumerate_binary_feasible(const Instance& inst, int k,
                                                      int cap) {
  inst.validate();
  if (k < 0) throw ValidationError("k must be nonnegative");
  if (inst.n > cap)
    throw ValidationError("instance exceeds the enumeration cap of " +
                          std::to_string(cap) + " columns");
  std::vector<SolutionVector> out;
  std::vector<long long> target(inst.m);
  for (int i = 0; i < inst.m; ++i) target[i] = static_cast<long long>(k) * inst.b[i];
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n); ++mask) {
    bool ok = true;
    for (int i = 0; i < inst.m && ok; ++i) {
      long long sum = 0;
      for (int j = 0; j < inst.n; ++j)
        if (mask >> j & 1) sum += inst.a[i][j];
      ok = sum == target[i];
    }
    if (!ok) continue;
    std::vector<Rational> x(inst.n);
    for (int j = 0; j < inst.n; ++j) x[j] = Rational((mask >> j & 1) ? 1 : 0);
    out.push_back(SolutionVector::from(std::move(x)));
  }
  return out;
}

MonopolyResult check_monopoly_free(const Instance& inst, int k) {
  if (k <= 0) throw ValidationError("k must be positive");
  if (solve_primal(inst, Rational(k)).status != SolveStatus::Optimal)
    throw InfeasibleError("P(" + std::to_string(k) + ") is infeasible");
  MonopolyResult result;
  for (int j = 0; j < inst.n; ++j) {
    std::vector<Rational> upper(inst.n, Rational(1));
    upper[j] = 0;
    const SolveResult r = solve_primal_restricted(inst, Rational(k), upper);
    if (r.status != SolveStatus::Optimal) {
      result.monopoly_free = false;
      result.failing_column = j;
      result.witnesses.clear();
      return result;
    }
    result.witnesses.push_back(r.x);
  }
  result.monopoly_free = true;
  return result;
}

}  // namespace tua
