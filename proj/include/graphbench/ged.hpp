// Exact graph edit distance with uniform unit costs, via branch-and-bound
// over padded node bijections. Off the scoring path by default (O(n!)); the
// node cap keeps it honest.
#pragma once

#include <optional>

#include "graphbench/graph.hpp"

namespace graphbench {

// nullopt = too large (either side exceeds node_cap).
std::optional<int> ged_exact(const Graph& a, const Graph& b, int node_cap = 8);

}  // namespace graphbench
