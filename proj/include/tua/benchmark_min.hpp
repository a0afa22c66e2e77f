#pragma once

#include <vector>

#include "tua/instance.hpp"
#include "tua/solver.hpp"

namespace tua {

// Price vector for the min benchmark: z agrees with c off the winning set,
// dominates c on it, keeps the winner optimal against every binary feasible
// solution, and gives each agent an equal-cost alternative avoiding it.
struct PricingVector {
  std::vector<Rational> z;
};

// k+1 binary unit solutions with pairwise-disjoint supports; their sum is
// feasible for P(k+1).
struct FeasibleCollection {
  std::vector<SolutionVector> members;
  Rational gamma;  // max member cost under c
};

// All feasible collections, deduplicated as multisets (members are listed in
// enumeration order of the unit solutions).
std::vector<FeasibleCollection> enumerate_feasible_collections(const Instance& inst,
                                                               int k, int cap = 20);

// Gamma_c = min over collections of the max member cost. Throws
// InfeasibleError when no collection exists.
Rational gamma_star(const Instance& inst, int k, int cap = 20);

struct MinBenchResult {
  Rational nu;
  PricingVector z;
  // For each column j of the winning set, a binary feasible solution with
  // x_j = 0 priced equally to the winner under z.
  std::vector<int> witness_columns;
  std::vector<SolutionVector> witnesses;
};

// Exact brute force over witness selections (the problem is NP-complete, so
// this is deliberately desk-scale only). Throws InfeasibleError when some
// winning column has no avoiding solution (monopoly violation).
MinBenchResult nu_bruteforce(const Instance& inst, int k, int cap = 20);

// Checks requirements on a candidate pricing against the full enumeration.
bool verify_pricing(const Instance& inst, int k, const SolutionVector& xstar,
                    const PricingVector& z, int cap = 20);

// Realizes the shared-optima construction: when every column can be avoided
// by some binary optimal solution of P(k), produces k+1 binary optimal
// solutions of P(1) whose sum is optimal for P(k+1). Throws PremiseError
// when the premise fails; aborts loudly if any piece costs more than phi(1).
struct PremiseError : std::runtime_error {
  int column;
  PremiseError(int col, const std::string& what)
      : std::runtime_error(what), column(col) {}
};

std::vector<SolutionVector> construct_shared_optima(const Instance& inst, int k);

enum class BoundVerdict { Holds, Violated };

// nu(k) >= k * Gamma_c, exact comparison.
BoundVerdict check_minbench_bound(const Rational& nu, const Rational& gamma, int k);

}  // namespace tua
