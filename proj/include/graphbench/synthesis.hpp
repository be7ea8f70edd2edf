// Instruction records, reference-pair dedup classification, and
// constraint-directed reference synthesis (the generic dispatch; the suite
// templates add their own specialized generators on top).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/constraints.hpp"
#include "graphbench/dsl.hpp"
#include "graphbench/pools.hpp"

namespace graphbench {

struct InstructionSpec {
    std::string id;  // "L2-047"
    int level = 0;
    std::string instruction;
    std::vector<std::string> explicit_constraints;
    std::vector<std::string> implicit_constraints;
    std::vector<std::string> graph_sizes;  // subset of {small, medium, large}
    std::vector<std::string> reference_solutions;  // serialized docs, 0-2
    bool feasible = true;
    std::optional<std::string> domain;      // level 4
    std::optional<std::string> base_graph;  // level 5, serialized doc

    // explicit + implicit parsed, with inference and feasibility run.
    ConstraintSet constraint_set() const;
};

enum class DedupClass { distinct, exact_dup, iso_only };

std::string to_string(DedupClass c);

// exact_dup: byte-identical after name stripping; iso_only: directed-aware
// isomorphic but textually different (mixed directedness is distinct by
// definition); else distinct. Parse failures throw.
DedupClass classify_pair(const std::string& ref_a, const std::string& ref_b);

// Constraint-directed synthesis: dispatches on the dominant constraint
// (graph_type family constructors, regular pairing, bipartite sides, grid,
// edge counts) and rejection-samples until validate() passes, within the
// reference retry budget. Infeasible sets and exhausted budgets throw.
GraphDoc synthesize_reference(const ConstraintSet& set, int level, std::uint64_t seed,
                              const std::string& name = "ref");

// Adds a minimum set of edges making every degree equal d; returns nullopt
// when no completion exists. `forbid` lists node pairs that must stay
// non-adjacent (unused by default).
std::optional<Graph> make_regular_completion(const Graph& base, int d);

// A distinct alternative completion when one exists (different edge set than
// `first`), else nullopt.
std::optional<Graph> alternative_regular_completion(const Graph& base, int d,
                                                    const Graph& first);

}  // namespace graphbench
