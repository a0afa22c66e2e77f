#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tua/parametric.hpp"
#include "tua/solver.hpp"

using tua::Instance;
using tua::Rational;

namespace {

// Independent oracle: best binary feasible cost via full enumeration.
std::optional<Rational> brute_min(const Instance& inst, int k) {
  std::optional<Rational> best;
  for (const auto& s : tua::enumerate_binary_feasible(inst, k)) {
    const Rational cost = inst.cost_of(s.x);
    if (!best || cost < *best) best = cost;
  }
  return best;
}

}  // namespace

TEST_CASE("cheap path wins at unit rate") {
  const Instance inst = fixtures::d1();
  const auto r = tua::solve_primal(inst, Rational(1));
  REQUIRE(r.status == tua::SolveStatus::Optimal);
  CHECK(r.objective == Rational(1));
  CHECK(r.x.x == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(r.x.binary);
}

TEST_CASE("zero rate has the empty optimum") {
  const auto r = tua::solve_primal(fixtures::d1(), Rational(0));
  REQUIRE(r.status == tua::SolveStatus::Optimal);
  CHECK(r.objective == Rational(0));
}

TEST_CASE("rates beyond capacity are infeasible") {
  CHECK(tua::solve_primal(fixtures::d1(), Rational(3)).status ==
        tua::SolveStatus::Infeasible);
}

TEST_CASE("negative rates are rejected") {
  CHECK_THROWS_AS(tua::solve_primal(fixtures::d1(), Rational(-1)),
                  tua::ValidationError);
}

TEST_CASE("fractional rates interpolate the endpoints") {
  const auto r = tua::solve_primal(fixtures::d1(), Rational(3, 2));
  REQUIRE(r.status == tua::SolveStatus::Optimal);
  CHECK(r.objective == Rational(2));  // phi(3/2) on the segment from 1 to 3
}

TEST_CASE("optimal solutions at integer rates are binary vertices") {
  for (const Instance& inst : fixtures::corpus(40)) {
    const auto f = tua::compute_phi(inst);
    for (long long k = 0; k <= f.lambda_max(); ++k) {
      const auto r = tua::solve_primal(inst, tua::to_rational(k));
      REQUIRE(r.status == tua::SolveStatus::Optimal);
      CHECK(r.x.binary);
    }
  }
}

TEST_CASE("solver value matches the enumeration oracle") {
  for (const Instance& inst : fixtures::corpus(40)) {
    if (inst.n > 14) continue;
    for (int k = 1; k <= 3; ++k) {
      const auto oracle = brute_min(inst, k);
      const auto r = tua::solve_primal(inst, Rational(k));
      if (!oracle) {
        CHECK(r.status == tua::SolveStatus::Infeasible);
      } else {
        REQUIRE(r.status == tua::SolveStatus::Optimal);
        CHECK(r.objective == *oracle);
      }
    }
  }
}

TEST_CASE("certificates satisfy the stated sign conditions") {
  const Instance inst = fixtures::d2();
  const auto r = tua::solve_primal(inst, Rational(1));
  REQUIRE(r.status == tua::SolveStatus::Optimal);
  CHECK(tua::verify_optimality(inst, Rational(1), r.x, r.certificate));
  // Tampering with a winning component must break the certificate.
  tua::DualCertificate bad = r.certificate;
  bad.y[0] += Rational(1, 2);
  CHECK_FALSE(tua::verify_optimality(inst, Rational(1), r.x, bad));
  // A feasible but suboptimal point must be rejected against any duals.
  tua::SolutionVector expensive = tua::SolutionVector::from(
      {Rational(0), Rational(0), Rational(1), Rational(1), Rational(0)});
  CHECK_FALSE(tua::verify_optimality(inst, Rational(1), expensive, r.certificate));
}

TEST_CASE("restricted bounds exclude pinned columns") {
  const Instance inst = fixtures::d1();
  std::vector<Rational> upper(inst.n, Rational(1));
  upper[0] = 0;
  const auto r = tua::solve_primal_restricted(inst, Rational(1), upper);
  REQUIRE(r.status == tua::SolveStatus::Optimal);
  CHECK(r.x.x[0] == 0);
  CHECK(r.objective == Rational(2));
}

TEST_CASE("tie-breaking favors earlier labels") {
  // All three edges of d4 cost 1; the canonical optimum at rate 2 must take
  // the first two.
  const auto x = tua::lexmin_optimal(fixtures::d4(), 2);
  CHECK(x.x == std::vector<Rational>{Rational(1), Rational(1), Rational(0)});

  const auto x1 = tua::lexmin_optimal(fixtures::d1(), 1);
  CHECK(x1.x == std::vector<Rational>{Rational(1), Rational(0)});
  const auto x2 = tua::lexmin_optimal(fixtures::d1(), 2);
  CHECK(x2.x == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("canonical optimum is deterministic and optimal on the corpus") {
  for (const Instance& inst : fixtures::corpus(25)) {
    const auto f = tua::compute_phi(inst);
    for (int k = 1; k <= 2 && k <= f.lambda_max(); ++k) {
      const auto a = tua::lexmin_optimal(inst, k);
      const auto b = tua::lexmin_optimal(inst, k);
      CHECK(a.x == b.x);
      CHECK(a.binary);
      CHECK(inst.cost_of(a.x) == tua::eval_phi(f, tua::to_rational(k)));
    }
  }
}

TEST_CASE("enumeration respects the documented order") {
  const auto sols = tua::enumerate_binary_feasible(fixtures::d1(), 1);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].x == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(sols[1].x == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("enumeration refuses oversized instances") {
  CHECK_THROWS_AS(tua::enumerate_binary_feasible(fixtures::d2(), 1, 3),
                  tua::ValidationError);
}

TEST_CASE("monopoly detection") {
  const auto ok = tua::check_monopoly_free(fixtures::d1(), 1);
  CHECK(ok.monopoly_free);
  REQUIRE(ok.witnesses.size() == 2);

  const auto bad = tua::check_monopoly_free(fixtures::d3(), 1);
  CHECK_FALSE(bad.monopoly_free);
  CHECK(bad.failing_column == 0);

  CHECK(tua::check_monopoly_free(fixtures::d2(), 1).monopoly_free);
}

TEST_CASE("monopoly freedom implies the next rate is feasible") {
  for (const Instance& inst : fixtures::corpus(40)) {
    const auto f = tua::compute_phi(inst);
    for (int k = 1; k <= 3 && k <= f.lambda_max(); ++k) {
      if (!tua::check_monopoly_free(inst, k).monopoly_free) continue;
      CHECK(tua::solve_primal(inst, Rational(k + 1)).status ==
            tua::SolveStatus::Optimal);
    }
  }
}
