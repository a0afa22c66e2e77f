#include "tua/lp.hpp"

#include <utility>

namespace tua::lp {
namespace {

constexpr long kIterationGuard = 1000000;

enum Where : int { kAtLower = 0, kAtUpper = 1, kBasic = 2 };

// Computational form: min c.t, T t = d, 0 <= t <= ub (ub may be absent).
// Artificial columns are appended, one per row, so B^{-1} is always readable
// off their tableau columns.
struct Core {
  int m = 0;  // rows
  int n = 0;  // structural columns (artificials follow)
  std::vector<std::vector<Rational>> tab;  // m x (n+m), equals B^{-1} * [T | I]
  std::vector<Rational> xb;                // values of basic variables
  std::vector<int> basis;                  // column index per row
  std::vector<int> where;                  // per column
  std::vector<std::optional<Rational>> ub;

  int total() const { return n + m; }

  Rational value_of(int j) const {
    if (where[j] == kBasic) {
      for (int i = 0; i < m; ++i)
        if (basis[i] == j) return xb[i];
    }
    return where[j] == kAtUpper ? *ub[j] : Rational(0);
  }
};

enum class RunStatus { Optimal, Unbounded };

RunStatus run_phase(Core& c, const std::vector<Rational>& cost) {
  const int total = c.total();
  for (long iter = 0;; ++iter) {
    if (iter > kIterationGuard)
      throw InternalError("simplex iteration guard tripped (cycling?)");

    // Entering column: Bland, smallest eligible index.
    int enter = -1;
    int dir = 0;
    for (int j = 0; j < total && enter < 0; ++j) {
      if (c.where[j] == kBasic) continue;
      if (c.ub[j] && *c.ub[j] == 0) continue;  // fixed column
      Rational r = cost[j];
      for (int i = 0; i < c.m; ++i) {
        const Rational& cb = cost[c.basis[i]];
        if (cb != 0 && c.tab[i][j] != 0) r -= cb * c.tab[i][j];
      }
      if (c.where[j] == kAtLower && r < 0) {
        enter = j;
        dir = +1;
      } else if (c.where[j] == kAtUpper && r > 0) {
        enter = j;
        dir = -1;
      }
    }
    if (enter < 0) return RunStatus::Optimal;

    // Ratio test; ties broken by smallest blocking variable index (Bland).
    std::optional<Rational> step;
    int leave_var = -1, leave_row = -1, leave_to = kAtLower;
    auto consider = [&](const Rational& lim, int var, int row, int to) {
      if (!step || lim < *step || (lim == *step && var < leave_var)) {
        step = lim;
        leave_var = var;
        leave_row = row;
        leave_to = to;
      }
    };
    if (c.ub[enter]) consider(*c.ub[enter], enter, -1, 0);  // bound flip
    for (int i = 0; i < c.m; ++i) {
      const Rational& w = c.tab[i][enter];
      if (w == 0) continue;
      const Rational delta = dir > 0 ? w : Rational(-w);
      if (delta > 0) {
        consider(c.xb[i] / delta, c.basis[i], i, kAtLower);
      } else if (c.ub[c.basis[i]]) {
        consider((*c.ub[c.basis[i]] - c.xb[i]) / Rational(-delta), c.basis[i], i,
                 kAtUpper);
      }
    }
    if (!step) return RunStatus::Unbounded;
    const Rational t = *step;

    for (int i = 0; i < c.m; ++i) {
      const Rational& w = c.tab[i][enter];
      if (w != 0) c.xb[i] -= dir > 0 ? t * w : Rational(-(t * w));
    }

    if (leave_row < 0) {  // bound flip, basis unchanged
      c.where[enter] = c.where[enter] == kAtLower ? kAtUpper : kAtLower;
      continue;
    }

    const int leaving = c.basis[leave_row];
    Rational enter_value = c.where[enter] == kAtUpper ? *c.ub[enter] : Rational(0);
    enter_value += dir > 0 ? t : Rational(-t);

    auto& prow = c.tab[leave_row];
    const Rational pivot = prow[enter];
    for (auto& v : prow) v /= pivot;
    for (int i = 0; i < c.m; ++i) {
      if (i == leave_row) continue;
      const Rational f = c.tab[i][enter];
      if (f == 0) continue;
      auto& row = c.tab[i];
      for (int j = 0; j < total; ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
    }
    c.basis[leave_row] = enter;
    c.where[enter] = kBasic;
    c.where[leaving] = leave_to;
    c.xb[leave_row] = enter_value;
  }
}

}  // namespace

Solution solve(const Problem& p) {
  const int n0 = p.num_vars();
  std::vector<Rational> c0 = p.objective;
  if (p.sense == Sense::Maximize)
    for (auto& v : c0) v = -v;

  // Map each variable to the computational form (lower bound 0).
  struct VarMap {
    int col = -1;
    int neg_col = -1;  // used when the variable is free
    Rational shift;    // x = shift + sign * t
    int sign = +1;
  };
  std::vector<VarMap> map(n0);
  std::vector<Rational> cost;
  std::vector<std::optional<Rational>> ub;
  for (int j = 0; j < n0; ++j) {
    VarMap& vm = map[j];
    const auto& lo = p.lower[j];
    const auto& hi = p.upper[j];
    if (lo && hi && *hi < *lo) return Solution{Status::Infeasible, {}, 0, {}};
    if (lo) {
      vm.col = static_cast<int>(cost.size());
      vm.shift = *lo;
      vm.sign = +1;
      cost.push_back(c0[j]);
      ub.push_back(hi ? std::optional<Rational>(*hi - *lo) : std::nullopt);
    } else if (hi) {
      vm.col = static_cast<int>(cost.size());
      vm.shift = *hi;
      vm.sign = -1;
      cost.push_back(-c0[j]);
      ub.push_back(std::nullopt);
    } else {  // free: split into difference of nonnegatives
      vm.col = static_cast<int>(cost.size());
      cost.push_back(c0[j]);
      ub.push_back(std::nullopt);
      vm.neg_col = static_cast<int>(cost.size());
      cost.push_back(-c0[j]);
      ub.push_back(std::nullopt);
      vm.shift = 0;
    }
  }

  const int m = static_cast<int>(p.rows.size());
  std::vector<std::vector<Rational>> rows(m);
  std::vector<Rational> rhs(m);
  std::vector<int> flip(m, 1);
  for (int i = 0; i < m; ++i) {
    const Row& row = p.rows[i];
    std::vector<Rational> r(cost.size(), Rational(0));
    Rational d = row.rhs;
    for (int j = 0; j < n0; ++j) {
      const Rational& a = row.coeffs[j];
      if (a == 0) continue;
      const VarMap& vm = map[j];
      r[vm.col] += a * vm.sign;
      if (vm.neg_col >= 0) r[vm.neg_col] -= a;
      d -= a * vm.shift;
    }
    if (row.sense != RowSense::Equal) {
      r.push_back(row.sense == RowSense::LessEq ? Rational(1) : Rational(-1));
      for (auto& other : rows) other.push_back(Rational(0));
      cost.push_back(Rational(0));
      ub.push_back(std::nullopt);
    }
    rows[i] = std::move(r);
    rhs[i] = std::move(d);
  }
  const int n = static_cast<int>(cost.size());
  for (auto& r : rows) r.resize(n, Rational(0));

  Core core;
  core.m = m;
  core.n = n;
  core.ub = ub;
  core.ub.resize(n + m, std::nullopt);
  core.where.assign(n + m, kAtLower);
  core.tab.assign(m, std::vector<Rational>(n + m, Rational(0)));
  core.xb.assign(m, Rational(0));
  core.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    if (rhs[i] < 0) {
      flip[i] = -1;
      for (auto& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
    }
    for (int j = 0; j < n; ++j) core.tab[i][j] = rows[i][j];
    core.tab[i][n + i] = 1;
    core.basis[i] = n + i;
    core.where[n + i] = kBasic;
    core.xb[i] = rhs[i];
  }

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(n + m, Rational(0));
  for (int i = 0; i < m; ++i) phase1[n + i] = 1;
  run_phase(core, phase1);
  Rational infeas(0);
  for (int i = 0; i < m; ++i) infeas += core.value_of(n + i);
  if (infeas != 0) return Solution{Status::Infeasible, {}, 0, {}};

  // Phase 2: pin artificials at zero and optimize the real objective.
  for (int i = 0; i < m; ++i) core.ub[n + i] = Rational(0);
  std::vector<Rational> phase2 = cost;
  phase2.resize(n + m, Rational(0));
  if (run_phase(core, phase2) == RunStatus::Unbounded)
    return Solution{Status::Unbounded, {}, 0, {}};

  Solution sol;
  sol.status = Status::Optimal;
  sol.x.resize(n0);
  for (int j = 0; j < n0; ++j) {
    const VarMap& vm = map[j];
    Rational t = core.value_of(vm.col);
    if (vm.neg_col >= 0) t -= core.value_of(vm.neg_col);
    sol.x[j] = vm.shift + Rational(vm.sign) * t;
  }
  sol.objective = 0;
  for (int j = 0; j < n0; ++j)
    if (p.objective[j] != 0) sol.objective += p.objective[j] * sol.x[j];

  sol.duals.resize(m);
  for (int i = 0; i < m; ++i) {
    Rational y(0);
    for (int r = 0; r < core.m; ++r) {
      const Rational& cb = phase2[core.basis[r]];
      if (cb != 0 && core.tab[r][n + i] != 0) y += cb * core.tab[r][n + i];
    }
    if (flip[i] < 0) y = -y;
    sol.duals[i] = p.sense == Sense::Maximize ? Rational(-y) : y;
  }
  return sol;
}

}  // namespace tua::lp
