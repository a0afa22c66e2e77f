#pragma once

#include <vector>

#include "tua/instance.hpp"
#include "tua/solver.hpp"

namespace tua {

// Split of a binary solution of P(k) into k binary solutions of P(1) with
// disjoint supports summing to the input.
struct Decomposition {
  std::vector<SolutionVector> pieces;
  Rational delta;  // max piece cost under c
};

// Inductive extraction: solve P(1) restricted to the remaining support for a
// vertex (binary by total unimodularity), subtract, recurse. Throws
// ValidationError when xbar is not binary or A xbar != k b.
Decomposition decompose(const Instance& inst, const SolutionVector& xbar, int k);

// True iff every piece is binary, satisfies A x = b, and the pieces sum to
// xbar exactly.
bool verify_decomposition(const Instance& inst, const SolutionVector& xbar,
                          const Decomposition& d);

}  // namespace tua
