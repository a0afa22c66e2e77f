#pragma once

#include <utility>
#include <vector>

#include "tua/instance.hpp"
#include "tua/rational.hpp"

namespace tua {

// The optimal-value function phi(lambda) of the parametric program
// min c.x s.t. A x = lambda b, 0 <= x <= 1: continuous, piecewise linear,
// convex, with integer breakpoints. Segment i covers
// [breakpoints[i], breakpoints[i+1]] with phi = intercepts[i] +
// slopes[i] * lambda.
struct PhiFunction {
  std::vector<long long> breakpoints;  // size segments()+1; first is 0
  std::vector<Rational> intercepts;
  std::vector<Rational> slopes;  // nondecreasing (convexity)

  int segments() const { return static_cast<int>(slopes.size()); }
  long long lambda_min() const { return breakpoints.front(); }
  long long lambda_max() const { return breakpoints.back(); }
};

// Builds phi by solving at every integer in [0, lambda_max] and merging
// collinear pieces; lambda_max comes from the auxiliary LP max lambda
// s.t. A x = lambda b, 0 <= x <= 1 (integral by total unimodularity).
PhiFunction compute_phi(const Instance& inst);

// Throws ValidationError outside [lambda_min, lambda_max].
Rational eval_phi(const PhiFunction& f, const Rational& lambda);

std::pair<long long, long long> feasible_range(const PhiFunction& f);

}  // namespace tua
