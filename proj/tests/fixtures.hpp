#pragma once

#include <cstdint>
#include <vector>

#include "tua/gen.hpp"
#include "tua/instance.hpp"

namespace fixtures {

inline tua::Instance preset(const std::string& name) {
  return tua::kflow_instance(tua::preset_kflow(name));
}

inline tua::Instance d1() { return preset("d1"); }
inline tua::Instance d2() { return preset("d2"); }
inline tua::Instance d3() { return preset("d3"); }
inline tua::Instance d4() { return preset("d4"); }

// Deterministic corpus of small flow instances. Sizes stay within the
// enumeration caps so brute-force oracles remain usable on every member.
inline std::vector<tua::Instance> corpus(int count) {
  std::vector<tua::Instance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = 1000 + i;
    const int nodes = 4 + i % 5;          // 4..8
    const int edges = 6 + i % 9;          // 6..14
    const int cost_bound = 1 + i % 10;    // 1..10
    out.push_back(
        tua::kflow_instance(tua::random_kflow(nodes, edges, cost_bound, seed)));
  }
  return out;
}

}  // namespace fixtures
