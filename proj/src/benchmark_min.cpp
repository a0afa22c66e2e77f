#include "tua/benchmark_min.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "tua/decompose.hpp"
#include "tua/lp.hpp"
#include "tua/parametric.hpp"

namespace tua {
namespace {

std::uint64_t support_mask(const SolutionVector& s) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < s.x.size(); ++j)
    if (s.x[j] != 0) mask |= std::uint64_t{1} << j;
  return mask;
}

// min z_{J1}.1 subject to the stability rows (one per binary feasible
// solution) and equality rows for the selected witnesses. Columns off J1 are
// fixed at c and folded into the right-hand sides.
struct SelectionLp {
  const Instance& inst;
  const std::vector<SolutionVector>& feasible;
  const SolutionVector& xstar;
  std::vector<int> j1;
  std::vector<int> z_var;  // column -> LP variable, -1 off J1
  std::vector<int> reps;   // one witness per J1-pattern, minimal off-J1 cost

  SelectionLp(const Instance& inst_, const std::vector<SolutionVector>& feasible_,
              const SolutionVector& xstar_)
      : inst(inst_), feasible(feasible_), xstar(xstar_), z_var(inst_.n, -1) {
    for (int j = 0; j < inst.n; ++j)
      if (xstar.x[j] == 1) j1.push_back(j);
    // Two feasible points with the same pattern on J1 yield the same stability
    // row up to the off-J1 cost on the right-hand side, and the cheaper one
    // makes the costlier one slack in every pricing, so one representative per
    // pattern is enough for both the inequalities and the tight selections.
    std::map<std::uint64_t, int> by_pattern;
    for (int i = 0; i < static_cast<int>(feasible.size()); ++i) {
      std::uint64_t pattern = 0;
      for (std::size_t t = 0; t < j1.size(); ++t)
        if (feasible[i].x[j1[t]] != 0) pattern |= std::uint64_t{1} << t;
      auto [it, inserted] = by_pattern.emplace(pattern, i);
      if (!inserted && off_cost(feasible[i]) < off_cost(feasible[it->second]))
        it->second = i;
    }
    for (const auto& [pattern, i] : by_pattern) reps.push_back(i);
  }

  Rational off_cost(const SolutionVector& s) const {
    Rational total(0);
    for (int j = 0; j < inst.n; ++j)
      if (xstar.x[j] != 1 && s.x[j] != 0) total += inst.c[j] * s.x[j];
    return total;
  }

  // z.x* - z.xbar <= 0 with z fixed to c off J1, as coeffs/rhs over z_{J1}.
  std::pair<std::vector<Rational>, Rational> stability_row(
      const SolutionVector& xbar, int num_vars) const {
    std::vector<Rational> row(num_vars, Rational(0));
    Rational rhs(0);
    for (int j = 0; j < inst.n; ++j) {
      const Rational diff = xstar.x[j] - xbar.x[j];
      if (diff == 0) continue;
      if (z_var[j] >= 0)
        row[z_var[j]] = diff;
      else
        rhs -= inst.c[j] * diff;
    }
    return {std::move(row), std::move(rhs)};
  }

  // Returns the optimal value, or nullopt when the selection admits no
  // pricing. `equalities` indexes into `feasible`.
  std::optional<std::pair<Rational, std::vector<Rational>>> solve(
      const std::vector<int>& equalities) {
    lp::Problem p;
    for (int j : j1)
      z_var[j] = p.add_variable(Rational(1), inst.c[j], std::nullopt);
    for (int i : reps) {
      auto [row, rhs] = stability_row(feasible[i], p.num_vars());
      p.add_row(std::move(row), lp::RowSense::LessEq, std::move(rhs));
    }
    for (int idx : equalities) {
      auto [row, rhs] = stability_row(feasible[idx], p.num_vars());
      p.add_row(std::move(row), lp::RowSense::Equal, std::move(rhs));
    }
    const lp::Solution sol = lp::solve(p);
    if (sol.status != lp::Status::Optimal) return std::nullopt;
    std::vector<Rational> z = inst.c;
    for (int j : j1) z[j] = sol.x[z_var[j]];
    return std::make_pair(sol.objective, std::move(z));
  }
};

}  // namespace

std::vector<FeasibleCollection> enumerate_feasible_collections(const Instance& inst,
                                                               int k, int cap) {
  if (k <= 0) throw ValidationError("k must be positive");
  const std::vector<SolutionVector> units = enumerate_binary_feasible(inst, 1, cap);
  std::vector<std::uint64_t> masks;
  masks.reserve(units.size());
  for (const auto& u : units) masks.push_back(support_mask(u));

  std::vector<FeasibleCollection> out;
  std::vector<int> chosen;
  const int want = k + 1;
  auto recurse = [&](auto&& self, int start, std::uint64_t used) -> void {
    if (static_cast<int>(chosen.size()) == want) {
      FeasibleCollection col;
      col.gamma = 0;
      for (int idx : chosen) {
        col.members.push_back(units[idx]);
        col.gamma = std::max(col.gamma, inst.cost_of(units[idx].x));
      }
      out.push_back(std::move(col));
      return;
    }
    for (int i = start; i < static_cast<int>(units.size()); ++i) {
      if (masks[i] & used) continue;
      chosen.push_back(i);
      self(self, i + 1, used | masks[i]);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

Rational gamma_star(const Instance& inst, int k, int cap) {
  const auto collections = enumerate_feasible_collections(inst, k, cap);
  if (collections.empty())
    throw InfeasibleError("no feasible collection for P(" + std::to_string(k + 1) + ")");
  Rational best = collections.front().gamma;
  for (const auto& col : collections) best = std::min(best, col.gamma);
  return best;
}

MinBenchResult nu_bruteforce(const Instance& inst, int k, int cap) {
  inst.validate();
  const std::vector<SolutionVector> feasible = enumerate_binary_feasible(inst, k, cap);
  const SolutionVector xstar = lexmin_optimal(inst, k);
  SelectionLp sel(inst, feasible, xstar);

  // Avoiding sets per winning column; columns off J1 are discharged by x*.
  std::vector<std::vector<int>> avoiding(inst.n);
  for (int j : sel.j1) {
    for (int i : sel.reps)
      if (feasible[i].x[j] == 0) avoiding[j].push_back(i);
    if (avoiding[j].empty())
      throw InfeasibleError("monopoly violation: no feasible solution avoids column " +
                            inst.labels[j]);
  }

  // A witness selection only matters through the set of distinct witnesses
  // it picks, and that set must cover every winning column. Enumerate cover
  // sets by branching on the first uncovered column; this visits every
  // minimal cover, which suffices since adding equalities never lowers the
  // optimum.
  std::optional<Rational> best;
  std::vector<Rational> best_z;
  std::vector<int> best_set;
  std::set<std::vector<int>> seen;  // partial states too, or the tree is factorial
  std::vector<int> current;

  auto covered = [&](int j) {
    for (int idx : current)
      if (feasible[idx].x[j] == 0) return true;
    return false;
  };
  auto recurse = [&](auto&& self) -> void {
    std::vector<int> key = current;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    int uncovered = -1;
    for (int j : sel.j1)
      if (!covered(j)) {
        uncovered = j;
        break;
      }
    if (uncovered < 0) {
      if (auto sol = sel.solve(key)) {
        if (!best || sol->first < *best) {
          best = sol->first;
          best_z = std::move(sol->second);
          best_set = key;
        }
      }
      return;
    }
    for (int idx : avoiding[uncovered]) {
      current.push_back(idx);
      self(self);
      current.pop_back();
    }
  };
  recurse(recurse);

  if (!best)
    throw InfeasibleError("min benchmark admits no pricing on this instance");

  MinBenchResult result;
  result.nu = *best;
  result.z.z = best_z;
  for (int j : sel.j1) {
    // Any selected witness avoiding j serves as its equal-cost alternative.
    for (int idx : best_set)
      if (feasible[idx].x[j] == 0) {
        result.witness_columns.push_back(j);
        result.witnesses.push_back(feasible[idx]);
        break;
      }
  }
  if (!verify_pricing(inst, k, xstar, result.z, cap))
    throw InternalError("optimal pricing failed re-verification");
  return result;
}

bool verify_pricing(const Instance& inst, int k, const SolutionVector& xstar,
                    const PricingVector& z, int cap) {
  if (static_cast<int>(z.z.size()) != inst.n) return false;
  for (int j = 0; j < inst.n; ++j) {
    if (xstar.x[j] == 1) {
      if (z.z[j] < inst.c[j]) return false;
    } else if (z.z[j] != inst.c[j]) {
      return false;
    }
  }
  const std::vector<SolutionVector> feasible = enumerate_binary_feasible(inst, k, cap);
  Rational winner_price(0);
  for (int j = 0; j < inst.n; ++j)
    if (xstar.x[j] != 0) winner_price += z.z[j] * xstar.x[j];
  auto priced = [&](const SolutionVector& s) {
    Rational total(0);
    for (int j = 0; j < inst.n; ++j)
      if (s.x[j] != 0) total += z.z[j] * s.x[j];
    return total;
  };
  for (const auto& xbar : feasible)
    if (winner_price > priced(xbar)) return false;
  for (int j = 0; j < inst.n; ++j) {
    bool matched = false;
    for (const auto& xbar : feasible)
      if (xbar.x[j] == 0 && priced(xbar) == winner_price) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

std::vector<SolutionVector> construct_shared_optima(const Instance& inst, int k) {
  inst.validate();
  if (k <= 0) throw ValidationError("k must be positive");
  const SolveResult base = solve_primal(inst, Rational(k));
  if (base.status != SolveStatus::Optimal)
    throw InfeasibleError("P(" + std::to_string(k) + ") is infeasible");
  const Rational phi_k = base.objective;

  // Premise: every column is avoided by some binary optimal solution.
  std::vector<Rational> union_support(inst.n, Rational(0));
  for (int j = 0; j < inst.n; ++j) {
    std::vector<Rational> upper(inst.n, Rational(1));
    upper[j] = 0;
    const SolveResult r = solve_primal_restricted(inst, Rational(k), upper);
    if (r.status != SolveStatus::Optimal || r.objective != phi_k)
      throw PremiseError(j, "no binary optimal solution avoids column " + inst.labels[j]);
    if (!r.x.binary)
      throw InternalError("fractional vertex contradicts total unimodularity");
    for (int col = 0; col < inst.n; ++col)
      if (r.x.x[col] != 0) union_support[col] = 1;
  }

  // Restrict to the union of witness supports and move one level up.
  const SolveResult lifted =
      solve_primal_restricted(inst, Rational(k + 1), union_support);
  if (lifted.status != SolveStatus::Optimal)
    throw InternalError("restricted P(k+1) infeasible; contradicts the construction");

  const Rational phi_1 = solve_primal(inst, Rational(1)).objective;
  Decomposition d = decompose(inst, lifted.x, k + 1);
  for (const auto& piece : d.pieces)
    if (inst.cost_of(piece.x) != phi_1)
      throw InternalError("piece cost " + to_string(inst.cost_of(piece.x)) +
                          " differs from phi(1) = " + to_string(phi_1) +
                          "; shared-optima construction falsified");
  return std::move(d.pieces);
}

BoundVerdict check_minbench_bound(const Rational& nu, const Rational& gamma, int k) {
  return nu >= Rational(k) * gamma ? BoundVerdict::Holds : BoundVerdict::Violated;
}

}  // namespace tua
