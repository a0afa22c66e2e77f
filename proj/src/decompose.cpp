#include "tua/decompose.hpp"

#include <algorithm>

namespace tua {

Decomposition decompose(const Instance& inst, const SolutionVector& xbar, int k) {
  inst.validate();
  if (k <= 0) throw ValidationError("k must be positive");
  if (static_cast<int>(xbar.x.size()) != inst.n || !is_binary_vector(xbar.x))
    throw ValidationError("decompose requires a binary n-vector");
  const std::vector<Rational> ax = inst.apply(xbar.x);
  for (int i = 0; i < inst.m; ++i)
    if (ax[i] != Rational(k) * to_rational(inst.b[i]))
      throw ValidationError("decompose requires A xbar = k b");

  Decomposition d;
  std::vector<Rational> remaining = xbar.x;
  for (int level = k; level >= 1; --level) {
    SolutionVector piece;
    if (level == 1) {
      piece = SolutionVector::from(remaining);
    } else {
      const SolveResult r = solve_primal_restricted(inst, Rational(1), remaining);
      if (r.status != SolveStatus::Optimal)
        throw InternalError("restricted P(1) infeasible during decomposition");
      if (!r.x.binary)
        throw InternalError("fractional vertex contradicts total unimodularity");
      piece = r.x;
      for (int j = 0; j < inst.n; ++j) remaining[j] -= piece.x[j];
    }
    d.pieces.push_back(std::move(piece));
  }
  d.delta = 0;
  for (const auto& piece : d.pieces) d.delta = std::max(d.delta, inst.cost_of(piece.x));
  return d;
}

bool verify_decomposition(const Instance& inst, const SolutionVector& xbar,
                          const Decomposition& d) {
  if (static_cast<int>(xbar.x.size()) != inst.n) return false;
  std::vector<Rational> sum(inst.n, Rational(0));
  for (const auto& piece : d.pieces) {
    if (static_cast<int>(piece.x.size()) != inst.n || !is_binary_vector(piece.x))
      return false;
    const std::vector<Rational> ax = inst.apply(piece.x);
    for (int i = 0; i < inst.m; ++i)
      if (ax[i] != to_rational(inst.b[i])) return false;
    for (int j = 0; j < inst.n; ++j) sum[j] += piece.x[j];
  }
  return sum == xbar.x;
}

}  // namespace tua
