#pragma once

#include <optional>
#include <vector>

#include "tua/instance.hpp"
#include "tua/rational.hpp"

namespace tua {

struct SolutionVector {
  std::vector<Rational> x;
  bool binary = false;  // set iff every component is 0 or 1

  static SolutionVector from(std::vector<Rational> values);
};

// Multipliers certifying optimality of a primal solution via the sign
// conditions y A_{J0} <= c_{J0}, y A_{Jf} = c_{Jf}, y A_{J1} >= c_{J1}.
struct DualCertificate {
  std::vector<Rational> y;
  std::vector<int> j0, jf, j1;  // column partition of the certified primal
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  SolutionVector x;
  Rational objective;
  DualCertificate certificate;
};

// Solves P(lambda): min c.x s.t. A x = lambda b, 0 <= x <= 1. Optimal results
// are vertex solutions (binary for integer lambda on TU instances) and carry
// a verified dual certificate. Unbounded cannot occur on this box slice and
// is reported as an internal error.
SolveResult solve_primal(const Instance& inst, const Rational& lambda);

// Same program with per-column upper bounds replacing the all-ones box.
SolveResult solve_primal_restricted(const Instance& inst, const Rational& lambda,
                                    const std::vector<Rational>& upper);

// Canonical optimum of P(k): for j = 1..n in label order, include column j
// whenever some optimal solution extending the fixed prefix does, so the
// earliest-labeled optimal agent set is selected. Deterministic.
SolutionVector lexmin_optimal(const Instance& inst, int k);

// Proposition-style optimality check: sign conditions for the partition
// induced by x plus the exact value identity
// c.x = lambda*(y.b) + (c_{J1} - y A_{J1}).1.
bool verify_optimality(const Instance& inst, const Rational& lambda,
                       const SolutionVector& x, const DualCertificate& cert);

// Exactly the set {x in {0,1}^n : A x = k b}, ordered with column 1 varying
// fastest (so e.g. (1,0) precedes (0,1)).
std::vector<SolutionVector> enumerate_binary_feasible(const Instance& inst, int k,
                                                      int cap = 20);

struct MonopolyResult {
  bool monopoly_free = false;
  std::vector<SolutionVector> witnesses;  // per column: a solution avoiding it
  int failing_column = -1;
};

// For each column j, solves P(k) with x_j = 0. Throws InfeasibleError when
// P(k) itself is infeasible.
MonopolyResult check_monopoly_free(const Instance& inst, int k);

}  // namespace tua
