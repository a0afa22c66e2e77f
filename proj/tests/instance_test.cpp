#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tua/instance.hpp"

using tua::Instance;
using tua::Rational;

TEST_CASE("text format round trips exactly") {
  const std::string text =
      "TU-AUCTION v1\n"
      "m 2 n 3\n"
      "A\n"
      "1 0 -1\n"
      "0 1 1\n"
      "b\n"
      "1 2\n"
      "c\n"
      "7/3 0 4\n"
      "names\n"
      "a b c\n";
  const Instance inst = tua::load_instance(text);
  CHECK(inst.m == 2);
  CHECK(inst.n == 3);
  CHECK(inst.c[0] == Rational(7, 3));
  CHECK(inst.labels[2] == "c");
  const Instance again = tua::load_instance(tua::save_instance(inst));
  CHECK(again.a == inst.a);
  CHECK(again.b == inst.b);
  CHECK(again.c == inst.c);
  CHECK(again.labels == inst.labels);
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text =
      "TU-AUCTION v1\n"
      "# a two-column toy\n"
      "m 1 n 2\n\n"
      "A\n"
      "1 1\n"
      "b\n"
      "1\n"
      "c\n"
      "1 2\n"
      "names\n"
      "x y\n";
  CHECK(tua::load_instance(text).n == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(tua::load_instance("BOGUS\n"), tua::ParseError);
  try {
    tua::load_instance("BOGUS\n");
  } catch (const tua::ParseError& e) {
    CHECK(e.line == 1);
  }
}

TEST_CASE("validation rejects zero b and negative costs") {
  Instance inst = fixtures::d1();
  Instance zero_b = inst;
  zero_b.b.assign(zero_b.m, 0);
  CHECK_THROWS_WITH_AS(zero_b.validate(), "b must be nonzero",
                       tua::ValidationError);
  Instance bad_cost = inst;
  bad_cost.c[0] = Rational(-1);
  CHECK_THROWS_AS(bad_cost.validate(), tua::ValidationError);
}

TEST_CASE("flow graphs become incidence instances") {
  const Instance inst = fixtures::d1();
  CHECK(inst.m == 2);
  CHECK(inst.n == 2);
  CHECK(inst.a == std::vector<std::vector<long long>>{{1, 1}, {-1, -1}});
  CHECK(inst.b == std::vector<long long>{1, -1});
  CHECK(inst.c[0] == Rational(1));
  CHECK(inst.c[1] == Rational(2));
}

TEST_CASE("incidence columns sum to zero and b is a unit difference") {
  for (const Instance& inst : fixtures::corpus(25)) {
    for (int j = 0; j < inst.n; ++j) {
      long long sum = 0;
      for (int i = 0; i < inst.m; ++i) sum += inst.a[i][j];
      CHECK(sum == 0);
    }
    long long bsum = 0, babs = 0;
    for (long long v : inst.b) {
      bsum += v;
      babs += v < 0 ? -v : v;
    }
    CHECK(bsum == 0);
    CHECK(babs == 2);
  }
}

TEST_CASE("graphs with coincident source and sink are rejected") {
  tua::KFlowGraph g = tua::preset_kflow("d1");
  g.sink = g.source;
  CHECK_THROWS_AS(g.validate(), tua::ValidationError);
}

TEST_CASE("unimodularity confirmed on incidence instances") {
  for (const std::string name : {"d1", "d2", "d3", "d4"}) {
    const auto res = tua::check_totally_unimodular(fixtures::preset(name));
    CHECK(res.verdict == tua::TuVerdict::Confirmed);
  }
  for (const Instance& inst : fixtures::corpus(10)) {
    const auto res = tua::check_totally_unimodular(inst, 4);
    CHECK(res.verdict == tua::TuVerdict::Confirmed);
  }
}

TEST_CASE("unimodularity refuted with a witness determinant") {
  Instance inst;
  inst.m = 1;
  inst.n = 1;
  inst.a = {{2}};
  inst.b = {1};
  inst.c = {Rational(1)};
  inst.labels = {"e1"};
  const auto res = tua::check_totally_unimodular(inst);
  REQUIRE(res.verdict == tua::TuVerdict::Refuted);
  CHECK(res.witness_det == 2);
  CHECK(res.witness_rows == std::vector<int>{0});
  CHECK(res.witness_cols == std::vector<int>{0});
}

TEST_CASE("unimodularity check skips oversized instances") {
  Instance inst;
  inst.m = 30;
  inst.n = 60;
  inst.a.assign(30, std::vector<long long>(60, 0));
  for (int i = 0; i < 30; ++i) inst.a[i][i] = 1;
  inst.b.assign(30, 0);
  inst.b[0] = 1;
  inst.c.assign(60, Rational(1));
  for (int j = 0; j < 60; ++j) inst.labels.push_back("e" + std::to_string(j + 1));
  const auto res = tua::check_totally_unimodular(inst, 4);
  CHECK(res.verdict == tua::TuVerdict::Skipped);
  CHECK(!res.note.empty());
}

TEST_CASE("kflow text format loads through the dispatching reader") {
  const std::string text =
      "KFLOW v1\n"
      "nodes 2 source s sink t\n"
      "edge s t 1\n"
      "edge s t 2\n";
  const Instance inst = tua::load_any(text);
  CHECK(inst.n == 2);
  CHECK(inst.b == std::vector<long long>{1, -1});
}
