// The instruction-template registry and suite orchestration: per-level
// template families with size-bucket quotas, the deliberately infeasible
// designs, and generate_instructions(), which turns a seed into the complete
// instruction suite (defaults: 100/200/200/150/100/50 across levels 0-5).
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "graphbench/synthesis.hpp"

namespace graphbench {

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::array<int, 6> level_counts{100, 200, 200, 150, 100, 50};
    int infeasible_l2 = 9;  // drawn from the registered infeasible designs
};

// The full suite, levels ascending, ids "L{level}-NNN" numbered per level in
// generation order. Every feasible spec carries two reference solutions that
// validate cleanly; generation re-checks that invariant and throws on any
// internal inconsistency. Deterministic: byte-identical output per config.
std::vector<InstructionSpec> generate_instructions(const SuiteConfig& config = {});

// Grouping key used by template-level analyses: "L{level}|" followed by the
// sorted unique explicit-constraint property names joined with ','.
std::string template_key(const InstructionSpec& spec);

// Feasible family ids in registry order (the infeasible designs reuse the
// constraint shapes of existing families and add no ids of their own).
std::vector<std::string> registry_family_ids();

// --- document-level edits (level-5 task construction) ---
// These operate on the serialized document rather than the adjacency view so
// untouched node names, attributes, and declared counts survive verbatim.
// All throw std::invalid_argument on references to missing nodes/edges or
// already-present additions.
GraphDoc doc_add_edge(const GraphDoc& base, const std::string& u, const std::string& v);
GraphDoc doc_remove_edge(const GraphDoc& base, const std::string& u, const std::string& v);
GraphDoc doc_add_node(const GraphDoc& base, const std::string& id,
                      const std::vector<std::string>& attach_to);
GraphDoc doc_remove_node(const GraphDoc& base, const std::string& id);

}  // namespace graphbench
