// CAAP registry, decision table, and prompt extras.
#include "graphbench/caap.hpp"

#include <sstream>
#include <stdexcept>

#include "graphbench/pools.hpp"
#include "graphbench/prompts.hpp"

namespace graphbench {

namespace {

struct FormulaEntry {
    const char* property;
    const char* formula;
};

constexpr FormulaEntry kFormulas[] = {
    {"density",
     "density = 2*m / (n*(n-1)) for an undirected graph with n nodes and m edges"},
    {"clustering_coefficient",
     "clustering coefficient of node v = 2*t(v) / (deg(v)*(deg(v)-1)), where t(v) "
     "counts edges among v's neighbours; the graph value is the mean over nodes"},
    {"average_path_length",
     "average path length = mean shortest-path distance over all connected node pairs"},
    {"modularity",
     "modularity = sum over communities c of (e_c/m - (d_c/(2*m))^2), where e_c "
     "counts edges inside c and d_c sums the degrees of c"},
};

}  // namespace

std::string to_string(TierClass c) {
    switch (c) {
        case TierClass::t1: return "T1";
        case TierClass::t2_gpt: return "T2-GPT";
        case TierClass::t2_open: return "T2-open";
        case TierClass::t3: return "T3";
    }
    return "T2-open";
}

const std::vector<ModelInfo>& model_registry() {
    static const std::vector<ModelInfo> registry = {
        {"Sonnet-4.6", Tier::T1, TierClass::t1},
        {"Qwen3.5-397B", Tier::T1, TierClass::t1},
        {"Qwen3.5-122B", Tier::T1, TierClass::t1},
        {"GPT-4o", Tier::T2, TierClass::t2_gpt},
        {"GPT-4.1", Tier::T2, TierClass::t2_gpt},
        {"DeepSeek-V3", Tier::T2, TierClass::t2_open},
        {"Llama-3.3-70B", Tier::T2, TierClass::t2_open},
        {"Qwen3.5-35B", Tier::T2, TierClass::t2_open},
        {"Sonnet-4", Tier::T2, TierClass::t2_open},
        {"GPT-3.5", Tier::T3, TierClass::t3},
        {"GPT-4o-mini", Tier::T3, TierClass::t3},
        {"Llama-3.1-8B", Tier::T3, TierClass::t3},
    };
    return registry;
}

const ModelInfo& model_info(const std::string& model) {
    for (const ModelInfo& info : model_registry())
        if (info.id == model) return info;
    throw std::invalid_argument("model '" + model +
                                "' has no registry entry; add it to model_registry()");
}

TierClass tier_class_for(const std::string& model) { return model_info(model).tier_class; }

bool is_simple_type(const InstructionSpec& instr) {
    for (const std::string& text : instr.explicit_constraints) {
        const ConstraintAtom atom = parse_constraint(text);
        if (atom.property != "graph_type") continue;
        const std::string value = atom.value_text();
        if (value == "tree" || value == "cycle" || value == "star" || value == "path" ||
            value == "complete")
            return true;
    }
    return false;
}

CaapDecision caap_select(const InstructionSpec& instr, const std::string& model) {
    const TierClass cls = tier_class_for(model);
    const bool weak = cls == TierClass::t3;
    const bool gpt = cls == TierClass::t2_gpt;
    CaapDecision decision;

    switch (instr.level) {
        case 0:
            decision.strategy = Strategy::zero_shot;
            decision.rationale = "single-constraint requests sit at ceiling zero-shot";
            break;
        case 1:
            if (is_simple_type(instr)) {
                decision.strategy = Strategy::zero_shot;
                decision.rationale = "simple shape types exceed 90% zero-shot";
            } else if (weak) {
                decision.strategy = Strategy::zero_cot;
                decision.rationale = "weaker tiers gain from explicit reasoning on "
                                     "structured types";
            } else if (gpt) {
                decision.strategy = Strategy::few_shot;
                decision.rationale = "GPT-family models track format exemplars best here";
            } else {
                decision.strategy = Strategy::few_cot;
                decision.rationale = "stronger tiers compose exemplars and reasoning";
            }
            break;
        case 2:
            if (weak) {
                decision.strategy = Strategy::zero_cot;
                decision.checklist = true;
                decision.rationale = "few-shot degrades multi-constraint composition on "
                                     "the weak tier; reasoning plus a checklist helps";
            } else if (gpt) {
                decision.strategy = Strategy::few_shot;
                decision.rationale = "GPT-family models compose constraints from "
                                     "exemplars";
            } else {
                decision.strategy = Strategy::few_cot;
                decision.rationale = "exemplars plus reasoning maximise joint "
                                     "satisfaction";
            }
            break;
        case 3:
            if (weak) {
                decision.strategy = Strategy::zero_cot;
                decision.formula = true;
                decision.rationale = "numeric targets need stepwise arithmetic and the "
                                     "defining formulas";
            } else if (gpt) {
                decision.strategy = Strategy::zero_shot;
                decision.rationale = "GPT-family models regress with verbose reasoning "
                                     "on numeric bands";
            } else {
                decision.strategy = Strategy::zero_cot;
                decision.rationale = "reasoning helps numeric attribute targeting";
            }
            break;
        case 4:
            decision.domain = true;
            if (weak || gpt) {
                decision.strategy = Strategy::few_shot;
                decision.rationale = "domain exemplars act as in-context retrieval";
            } else {
                decision.strategy = Strategy::few_cot;
                decision.rationale = "exemplars plus reasoning over the domain prior";
            }
            break;
        default:
            if (weak) {
                decision.strategy = Strategy::zero_cot;
                decision.rationale = "edit sequences need explicit stepwise reasoning";
            } else {
                decision.strategy = Strategy::few_cot;
                decision.rationale = "worked edit examples plus reasoning track the "
                                     "base graph best";
            }
            break;
    }
    return decision;
}

std::string render_domain_prior(const std::string& domain, int n) {
    const DomainPrior* prior = find_domain(domain);
    if (!prior)
        throw std::invalid_argument("no domain prior for '" + domain + "'");
    std::ostringstream out;
    out << "Domain context: " << prior->name << " network";
    if (n > 0) out << " (" << n << " nodes)";
    out << ". Expected structural properties: mean degree " << prior->degree_lo << "-"
        << prior->degree_hi << ", clustering coefficient " << prior->clustering_lo << "-"
        << prior->clustering_hi << ", density " << prior->density_lo << "-"
        << prior->density_hi << ", " << prior->degree_distribution
        << " degree distribution; " << prior->structure_hint << ".";
    return out.str();
}

std::string render_checklist(const InstructionSpec& instr) {
    std::ostringstream out;
    out << "Before answering, verify each requirement:";
    for (const std::string& text : instr.explicit_constraints) {
        const ConstraintAtom atom = parse_constraint(text);
        out << "\nverify: " << atom.text();
    }
    return out.str();
}

std::string render_formula_sheet(const InstructionSpec& instr) {
    std::ostringstream out;
    bool any = false;
    for (const FormulaEntry& entry : kFormulas) {
        bool mentioned = false;
        for (const std::string& text : instr.explicit_constraints)
            if (parse_constraint(text).property == entry.property) mentioned = true;
        if (!mentioned) continue;
        if (!any) out << "Useful formulas:";
        out << "\n- " << entry.formula;
        any = true;
    }
    return any ? out.str() : std::string();
}

std::string caap_extras_text(const CaapDecision& decision, const InstructionSpec& instr) {
    std::vector<std::string> parts;
    if (decision.domain && instr.domain) {
        int n = 0;
        for (const std::string& text : instr.explicit_constraints) {
            const ConstraintAtom atom = parse_constraint(text);
            if (atom.property == "num_nodes" && atom.relation == Relation::eq)
                n = static_cast<int>(atom.number());
        }
        parts.push_back(render_domain_prior(*instr.domain, n));
    }
    if (decision.checklist) parts.push_back(render_checklist(instr));
    if (decision.formula) {
        const std::string sheet = render_formula_sheet(instr);
        if (!sheet.empty()) parts.push_back(sheet);
    }
    std::string joined;
    for (const std::string& part : parts) {
        if (!joined.empty()) joined += "\n\n";
        joined += part;
    }
    return joined;
}

VgigResult run_combined(const InstructionSpec& instr, ChatClient& client,
                        const VgigConfig& config, const RunConfig& run,
                        const std::vector<InstructionSpec>& suite) {
    const CaapDecision decision = caap_select(instr, run.model);
    std::vector<const InstructionSpec*> exemplars;
    if (decision.strategy == Strategy::few_shot || decision.strategy == Strategy::few_cot)
        exemplars = select_exemplars(suite, instr, 3);
    const std::string extra = caap_extras_text(decision, instr);
    const std::vector<Message> round0 =
        build_prompt(instr, decision.strategy, exemplars, extra);
    RunConfig cell = run;
    cell.strategy = decision.strategy;
    return run_vgig(instr, client, config, cell, round0);
}

}  // namespace graphbench
