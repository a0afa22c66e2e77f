#include "tua/gen.hpp"

#include <algorithm>
#include <vector>

namespace tua {
namespace {

// splitmix64: tiny, portable, and stable across platforms, which keeps
// generated fixtures byte-identical everywhere.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

KFlowGraph parallel_edges(int count, std::vector<int> costs) {
  KFlowGraph g;
  g.node_count = 2;
  g.source = 0;
  g.sink = 1;
  g.node_names = {"s", "t"};
  for (int i = 0; i < count; ++i)
    g.edges.push_back({0, 1, Rational(costs[i])});
  return g;
}

}  // namespace

KFlowGraph preset_kflow(const std::string& name) {
  if (name == "d1") return parallel_edges(2, {1, 2});
  if (name == "d3") return parallel_edges(1, {1});
  if (name == "d4") return parallel_edges(3, {1, 1, 1});
  if (name == "d2") {
    KFlowGraph g;
    g.node_count = 4;
    g.source = 0;
    g.sink = 3;
    g.node_names = {"s", "a", "b", "t"};
    g.edges.push_back({0, 1, Rational(1)});   // e1: s->a
    g.edges.push_back({1, 3, Rational(1)});   // e2: a->t
    g.edges.push_back({0, 2, Rational(3)});   // e3: s->b
    g.edges.push_back({2, 3, Rational(3)});   // e4: b->t
    g.edges.push_back({0, 3, Rational(10)});  // e5: s->t
    return g;
  }
  throw ValidationError("unknown preset '" + name + "' (want d1, d2, d3, or d4)");
}

KFlowGraph random_kflow(int nodes, int edges, int cost_bound, std::uint64_t seed) {
  if (nodes < 2) throw ValidationError("need at least two nodes");
  if (edges < 1) throw ValidationError("need at least one edge");
  if (cost_bound < 1) throw ValidationError("cost bound must be positive");

  Rng rng(seed);
  KFlowGraph g;
  g.node_count = nodes;
  g.source = 0;
  g.sink = nodes - 1;

  const int internal = nodes - 2;
  int depth = internal == 0 ? 0 : 1 + rng.below(std::min(internal, 3));
  std::vector<int> layer(nodes, 0);
  layer[g.sink] = depth + 1;
  for (int v = 1; v < nodes - 1; ++v) layer[v] = 1 + rng.below(depth);

  auto random_cost = [&] { return Rational(1 + rng.below(cost_bound)); };

  // Backbone: one node per nonempty layer, in layer order, when the edge
  // budget allows; otherwise a single direct edge.
  std::vector<int> backbone{g.source};
  for (int l = 1; l <= depth; ++l) {
    std::vector<int> in_layer;
    for (int v = 1; v < nodes - 1; ++v)
      if (layer[v] == l) in_layer.push_back(v);
    if (!in_layer.empty()) backbone.push_back(in_layer[rng.below(static_cast<int>(in_layer.size()))]);
  }
  backbone.push_back(g.sink);
  if (static_cast<int>(backbone.size()) - 1 > edges) backbone = {g.source, g.sink};
  for (std::size_t i = 0; i + 1 < backbone.size(); ++i)
    g.edges.push_back({backbone[i], backbone[i + 1], random_cost()});

  while (static_cast<int>(g.edges.size()) < edges) {
    const int u = rng.below(nodes);
    const int v = rng.below(nodes);
    if (layer[u] >= layer[v]) continue;
    g.edges.push_back({u, v, random_cost()});
  }
  g.validate();
  return g;
}

}  // namespace tua
