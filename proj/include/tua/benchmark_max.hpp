#pragma once

#include <vector>

#include "tua/instance.hpp"
#include "tua/parametric.hpp"
#include "tua/solver.hpp"

namespace tua {

// Result of the max benchmark LP
//   max z_{J1}.1  s.t.  y A_{J0} <= c_{J0},  y A_{J1} >= z_{J1},  z_{J1} >= c_{J1}
// where (J0, J1) comes from the canonical optimum of P(k).
struct MaxBenchResult {
  SolveStatus status = SolveStatus::Optimal;  // Unbounded when P(k+1) infeasible
  Rational mu;
  std::vector<Rational> z;  // full n-vector; z_j = c_j off J1
  std::vector<Rational> y;
  std::vector<int> j0, j1;
};

MaxBenchResult solve_bmax(const Instance& inst, int k);

// k * [phi(k+1) - phi(k)]; requires k+1 within the feasible range.
Rational mu_via_phi(const PhiFunction& f, int k);

// Restriction to the support of the canonical optimum of P(k+1).
struct PrunedInstance {
  Instance instance;
  std::vector<int> parent_columns;  // pruned column -> parent column
};

PrunedInstance prune(const Instance& inst, int k);

// Max benchmark value of the pruned problem, computed both by the explicit
// LP and by the phi formula; the two must agree exactly.
Rational mu_tilde(const Instance& inst, int k);

enum class SandwichVerdict { Holds, ViolatedLower, ViolatedUpper };

// Checks mu_tilde <= mu <= (k+1) * mu_tilde exactly.
SandwichVerdict check_sandwich(const Rational& mu, const Rational& mu_tilde, int k);

}  // namespace tua
