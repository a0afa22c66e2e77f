#include "tua/parametric.hpp"

#include "tua/lp.hpp"
#include "tua/solver.hpp"

namespace tua {
namespace {

long long feasibility_limit(const Instance& inst) {
  lp::Problem p;
  for (int j = 0; j < inst.n; ++j)
    p.add_variable(Rational(0), Rational(0), Rational(1));
  const int lam = p.add_variable(Rational(1), Rational(0), std::nullopt);
  p.sense = lp::Sense::Maximize;
  for (int i = 0; i < inst.m; ++i) {
    std::vector<Rational> row(inst.n + 1);
    for (int j = 0; j < inst.n; ++j) row[j] = to_rational(inst.a[i][j]);
    row[lam] = to_rational(-inst.b[i]);
    p.add_row(std::move(row), lp::RowSense::Equal, Rational(0));
  }
  const lp::Solution sol = lp::solve(p);
  if (sol.status != lp::Status::Optimal)
    throw InternalError("auxiliary max-lambda LP must have an optimum (b != 0)");
  if (!is_integer(sol.objective))
    throw InternalError("fractional feasibility limit contradicts total unimodularity");
  return to_integer(sol.objective);
}

}  // namespace

PhiFunction compute_phi(const Instance& inst) {
  inst.validate();
  const long long limit = feasibility_limit(inst);

  std::vector<Rational> values(limit + 1);
  for (long long k = 0; k <= limit; ++k) {
    const SolveResult r = solve_primal(inst, to_rational(k));
    if (r.status != SolveStatus::Optimal)
      throw InternalError("P(lambda) infeasible inside its feasibility interval");
    values[k] = r.objective;
  }

  PhiFunction f;
  f.breakpoints.push_back(0);
  for (long long k = 0; k < limit; ++k) {
    // Integer breakpoints make phi linear between consecutive integers.
    const Rational slope = values[k + 1] - values[k];
    const Rational intercept = values[k] - slope * to_rational(k);
    if (!f.slopes.empty() && f.slopes.back() == slope) {
      f.breakpoints.back() = k + 1;  // extend the collinear segment
      continue;
    }
    if (!f.slopes.empty() && f.slopes.back() > slope)
      throw InternalError("phi lost convexity; solver or instance is broken");
    f.slopes.push_back(slope);
    f.intercepts.push_back(intercept);
    f.breakpoints.push_back(k + 1);
  }
  return f;
}

Rational eval_phi(const PhiFunction& f, const Rational& lambda) {
  if (lambda < to_rational(f.lambda_min()) || lambda > to_rational(f.lambda_max()))
    throw ValidationError("lambda " + to_string(lambda) + " outside feasible range [" +
                          std::to_string(f.lambda_min()) + ", " +
                          std::to_string(f.lambda_max()) + "]");
  if (f.segments() == 0) return Rational(0);  // single feasible point, phi(0) = 0
  for (int i = 0; i < f.segments(); ++i)
    if (lambda <= to_rational(f.breakpoints[i + 1]))
      return f.intercepts[i] + f.slopes[i] * lambda;
  throw InternalError("segment lookup fell through");
}

std::pair<long long, long long> feasible_range(const PhiFunction& f) {
  return {f.lambda_min(), f.lambda_max()};
}

}  // namespace tua
