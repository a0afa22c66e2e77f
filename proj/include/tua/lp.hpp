#pragma once

#include <optional>
#include <vector>

#include "tua/rational.hpp"

namespace tua::lp {

enum class Status { Optimal, Infeasible, Unbounded };
enum class RowSense { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };

struct Row {
  std::vector<Rational> coeffs;  // dense, one per variable
  RowSense sense = RowSense::Equal;
  Rational rhs;
};

// General-form LP. Bounds may be absent on either side; absent means
// unbounded in that direction.
struct Problem {
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<Row> rows;

  int add_variable(const Rational& obj, std::optional<Rational> lo,
                   std::optional<Rational> hi) {
    objective.push_back(obj);
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    return static_cast<int>(objective.size()) - 1;
  }
  void add_row(std::vector<Rational> coeffs, RowSense s, Rational rhs) {
    rows.push_back(Row{std::move(coeffs), s, std::move(rhs)});
  }
  int num_vars() const { return static_cast<int>(objective.size()); }
};

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  // One multiplier per row. For Minimize these are the classical duals
  // (c_j - y.A_j >= 0 for nonbasic-at-lower columns); for Maximize they are
  // negated to match the stated sense.
  std::vector<Rational> duals;
};

// Exact-arithmetic bounded-variable primal simplex, Bland's rule, two-phase.
// Deterministic: identical problems produce identical solutions.
Solution solve(const Problem& p);

}  // namespace tua::lp
