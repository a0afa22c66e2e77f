#pragma once

#include <cstdint>
#include <string>

#include "tua/instance.hpp"

namespace tua {

// Fixture graphs: d1 (two parallel s-t edges, costs 1 and 2), d2 (two 2-edge
// paths costing 2 and 6 plus a direct edge of cost 10), d3 (a single edge),
// d4 (three parallel unit-cost edges).
KFlowGraph preset_kflow(const std::string& name);

// Layered DAG from s to t: a backbone path guarantees connectivity, extra
// edges only run from lower to strictly higher layers. Deterministic in the
// seed; byte-identical instances for identical arguments.
KFlowGraph random_kflow(int nodes, int edges, int cost_bound, std::uint64_t seed);

}  // namespace tua
