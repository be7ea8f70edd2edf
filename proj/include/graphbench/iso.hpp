// Graph isomorphism via degree-profile-pruned backtracking. Directed-aware.
// Oversized inputs yield `too_large`, never a wrong verdict.
#pragma once

#include "graphbench/graph.hpp"

namespace graphbench {

enum class IsoResult { yes, no, too_large };

IsoResult is_isomorphic(const Graph& a, const Graph& b, int node_cap = 256);

}  // namespace graphbench
