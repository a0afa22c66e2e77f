#pragma once

#include <string>
#include <vector>

#include "tua/rational.hpp"

namespace tua {

// Auction instance: minimize c.x subject to A x = k b, 0 <= x <= 1, over a
// totally unimodular system (A, b). Immutable after construction.
struct Instance {
  int m = 0;  // rows
  int n = 0;  // columns (agents)
  std::vector<std::vector<long long>> a;  // m x n, integer entries
  std::vector<long long> b;               // m, nonzero vector
  std::vector<Rational> c;                // n, nonnegative costs
  std::vector<std::string> labels;        // n, agent names

  void validate() const;  // throws ValidationError
  Rational cost_of(const std::vector<Rational>& x) const;
  // A x as exact rationals.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

struct KFlowGraph {
  struct Edge {
    int tail = 0;
    int head = 0;
    Rational cost;
  };
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Edge> edges;
  std::vector<std::string> node_names;  // optional, for diagnostics

  void validate() const;
};

// TU-AUCTION v1 text format.
Instance load_instance(const std::string& text);
std::string save_instance(const Instance& inst);

// KFLOW v1 text format.
KFlowGraph load_kflow(const std::string& text);

// Dispatches on the first line (TU-AUCTION v1 or KFLOW v1).
Instance load_any(const std::string& text);

// Node-edge incidence construction: +1 at tail, -1 at head per edge column;
// b is +1 at the source row and -1 at the sink row.
Instance kflow_instance(const KFlowGraph& g);

enum class TuVerdict { Confirmed, Refuted, Skipped };

struct TuResult {
  TuVerdict verdict = TuVerdict::Skipped;
  // Witness submatrix of (A, b) with |det| >= 2, when refuted.
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;  // column n means the b column
  long long witness_det = 0;
  std::string note;
};

// Enumerates square submatrices of (A, b) up to order size_limit and checks
// every determinant lies in {-1, 0, 1}. Instances larger than the dimension
// cap are skipped (incidence-constructed instances are TU by construction).
TuResult check_totally_unimodular(const Instance& inst, int size_limit = 6);

}  // namespace tua
