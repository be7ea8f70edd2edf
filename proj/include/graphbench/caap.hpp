// Constraint-aware adaptive prompting: the model registry with capability
// tiers, the per-(level, constraint-profile, tier-class) strategy decision
// table, prompt extras (checklist, formula sheet, domain prior), and the
// combined selection + refinement pipeline.
#pragma once

#include <string>
#include <vector>

#include "graphbench/scoring.hpp"
#include "graphbench/synthesis.hpp"
#include "graphbench/vgig.hpp"

namespace graphbench {

// Dispatch classes: the two GPT-family T2 models behave differently enough
// from the open-weight T2 group to warrant their own column.
enum class TierClass { t1, t2_gpt, t2_open, t3 };

std::string to_string(TierClass c);

struct ModelInfo {
    std::string id;  // analysis-facing name, e.g. "GPT-4o-mini"
    Tier tier = Tier::T2;
    TierClass tier_class = TierClass::t2_open;
};

// The 12 evaluated models with their published tier assignments.
const std::vector<ModelInfo>& model_registry();
// Throws std::invalid_argument demanding a registry entry for unknown ids.
const ModelInfo& model_info(const std::string& model);
TierClass tier_class_for(const std::string& model);

struct CaapDecision {
    Strategy strategy = Strategy::zero_shot;
    bool checklist = false;  // per-constraint verify lines (L2, weaker models)
    bool formula = false;    // formula sheet for mentioned properties (L3)
    bool domain = false;     // domain prior text (L4)
    std::string rationale;
};

// Exact decision-table dispatch, including the L1 simple-type override.
CaapDecision caap_select(const InstructionSpec& instr, const std::string& model);

// True when the instruction's graph_type is one of the simple shapes
// (tree, cycle, star, path, complete) every tier handles at ceiling.
bool is_simple_type(const InstructionSpec& instr);

// "Domain context: ..." augmentation from the 8-entry prior table; throws on
// unknown domains.
std::string render_domain_prior(const std::string& domain, int n);

// One "verify: <atom>" line per explicit constraint.
std::string render_checklist(const InstructionSpec& instr);

// Definitions for the numeric properties the instruction mentions, from a
// fixed four-entry table (density, clustering, path length, modularity).
std::string render_formula_sheet(const InstructionSpec& instr);

// The decision's extras rendered for prompt injection (empty when none).
std::string caap_extras_text(const CaapDecision& decision, const InstructionSpec& instr);

// caap_select -> strategy prompt (+ extras, domain prior at L4) -> run_vgig.
VgigResult run_combined(const InstructionSpec& instr, ChatClient& client,
                        const VgigConfig& config, const RunConfig& run,
                        const std::vector<InstructionSpec>& suite);

}  // namespace graphbench
