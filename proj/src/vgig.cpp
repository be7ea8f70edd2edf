// Verification-guided iterative generation: feedback rendering, refinement
// prompting, and the multi-chain loop.
#include "graphbench/vgig.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "graphbench/pools.hpp"
#include "graphbench/properties.hpp"

namespace graphbench {

namespace {

constexpr double kChainOffsets[5] = {-0.10, 0.00, +0.10, -0.05, +0.05};

std::string format_number(double value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

std::string coarse_text(const Violation& violation, int level) {
    switch (level) {
        case 0:
        case 1:
            return "violated: " + violation.atom.text();
        case 2:
            return to_string(violation.category) +
                   " constraint unsatisfied: " + violation.atom.text();
        case 3:
            return "attribute deficit: " + violation.atom.text();
        case 4:
            return "missing structural pattern: " + violation.atom.text();
        default:
            return "edit not applied correctly: " + violation.atom.text();
    }
}

// The two-sided band an L3-style numeric constraint pair implies, rendered
// for the model; one-sided constraints render the single bound.
std::string tolerance_band_text(const ConstraintSet& set, const ConstraintAtom& atom) {
    const ConstraintAtom* lo = set.find(atom.property, Relation::ge);
    const ConstraintAtom* hi = set.find(atom.property, Relation::le);
    if (lo && hi)
        return "; target band [" + lo->value_text() + ", " + hi->value_text() + "]";
    if (atom.relation == Relation::ge) return "; bound: at least " + atom.value_text();
    if (atom.relation == Relation::le) return "; bound: at most " + atom.value_text();
    return "; tolerance +-1e-06";
}

std::string domain_baseline_text(const std::string& domain, const ConstraintAtom& atom) {
    const DomainPrior* prior = find_domain(domain);
    if (!prior) return "";
    std::ostringstream out;
    if (atom.property == "density")
        out << "; domain baseline for " << domain << ": density typically "
            << prior->density_lo << "-" << prior->density_hi;
    else if (atom.property == "clustering_coefficient")
        out << "; domain baseline for " << domain << ": clustering typically "
            << prior->clustering_lo << "-" << prior->clustering_hi;
    else if (atom.property == "max_degree" || atom.property == "min_degree" ||
             atom.property == "degree" || atom.property == "num_edges")
        out << "; domain baseline for " << domain << ": mean degree typically "
            << prior->degree_lo << "-" << prior->degree_hi;
    return out.str();
}

// Added/removed node and edge counts of `doc` relative to the instruction's
// base graph (the intermediate-state diff for edit instructions).
std::string base_diff_text(const InstructionSpec& instr, const GraphDoc& doc) {
    if (!instr.base_graph) return "";
    ParseResult base = parse_document(*instr.base_graph);
    if (!base.ok()) return "";
    auto edge_set = [](const GraphDoc& d) {
        std::set<std::pair<std::string, std::string>> edges;
        for (const Edge& e : d.edges) {
            if (d.directed)
                edges.insert(e);
            else
                edges.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
        }
        return edges;
    };
    const auto base_edges = edge_set(*base.doc);
    const auto doc_edges = edge_set(doc);
    const std::set<std::string> base_nodes(base.doc->nodes.begin(), base.doc->nodes.end());
    const std::set<std::string> doc_nodes(doc.nodes.begin(), doc.nodes.end());
    int edges_added = 0, edges_removed = 0, nodes_added = 0, nodes_removed = 0;
    for (const auto& e : doc_edges)
        if (!base_edges.count(e)) ++edges_added;
    for (const auto& e : base_edges)
        if (!doc_edges.count(e)) ++edges_removed;
    for (const auto& v : doc_nodes)
        if (!base_nodes.count(v)) ++nodes_added;
    for (const auto& v : base_nodes)
        if (!doc_nodes.count(v)) ++nodes_removed;
    std::ostringstream out;
    out << "; relative to the base graph: +" << edges_added << "/-" << edges_removed
        << " edges, +" << nodes_added << "/-" << nodes_removed << " nodes";
    return out.str();
}

}  // namespace

std::string to_string(FeedbackLevel level) {
    switch (level) {
        case FeedbackLevel::none: return "none";
        case FeedbackLevel::coarse: return "coarse";
        case FeedbackLevel::fine: return "fine";
    }
    return "fine";
}

std::optional<FeedbackLevel> feedback_from_string(const std::string& text) {
    if (text == "none") return FeedbackLevel::none;
    if (text == "coarse") return FeedbackLevel::coarse;
    if (text == "fine") return FeedbackLevel::fine;
    return std::nullopt;
}

double chain_temperature(double base, int chain) {
    const int slot = ((chain % 5) + 5) % 5;
    return std::clamp(base + kChainOffsets[slot], 0.1, 1.5);
}

double refinement_temperature(double chain_temp) {
    return std::max(0.2, 0.6 * chain_temp);
}

std::vector<FeedbackItem> generate_feedback(const GraphDoc& doc, const ConstraintSet& set,
                                            const InstructionSpec& instr,
                                            FeedbackLevel granularity) {
    const std::vector<Violation> violations = validate(doc, set);
    if (violations.empty()) return {};

    if (granularity == FeedbackLevel::none) {
        FeedbackItem marker;
        marker.text = "some constraint failed";
        marker.granularity = FeedbackLevel::none;
        return {marker};
    }

    const int level = instr.level;
    std::vector<FeedbackItem> items;
    items.reserve(violations.size());

    // Level-specific fine extras computed once across the violation list.
    std::string joint_suffix;
    if (level == 2 && violations.size() >= 2) {
        std::ostringstream joint;
        joint << "; jointly unsatisfied with:";
        for (const Violation& v : violations) joint << ' ' << v.atom.property;
        joint_suffix = joint.str();
    }
    std::string l5_suffix;
    if (level == 5) {
        int total = 0, satisfied = 0;
        for (const ConstraintAtom& atom : set.all()) {
            if (atom.property == "task_type") continue;
            ++total;
        }
        satisfied = total - static_cast<int>(violations.size());
        std::ostringstream credit;
        credit << "; edit progress: " << std::max(0, satisfied) << "/" << total
               << " checks pass" << base_diff_text(instr, doc);
        l5_suffix = credit.str();
    }

    for (const Violation& violation : violations) {
        FeedbackItem item;
        item.violation = violation;
        item.granularity = granularity;
        std::ostringstream text;
        text << coarse_text(violation, level);
        if (granularity == FeedbackLevel::fine) {
            text << "; expected " << violation.expected << ", observed "
                 << violation.observed;
            if (violation.delta) {
                text << "; delta " << (*violation.delta >= 0 ? "+" : "")
                     << format_number(*violation.delta);
            }
            if (level == 2) text << joint_suffix;
            if (level == 3 && violation.atom.numeric())
                text << tolerance_band_text(set, violation.atom);
            if (level == 4 && instr.domain)
                text << domain_baseline_text(*instr.domain, violation.atom);
            if (level == 5) text << l5_suffix;
            if (!violation.note.empty()) text << "; note: " << violation.note;
        }
        item.text = text.str();
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<Message> refine_prompt(const InstructionSpec& instr, const GraphDoc& previous,
                                   const std::vector<FeedbackItem>& feedback, int round) {
    std::ostringstream user;
    user << "Instruction: " << instr.instruction << "\n\n"
         << "Your previous answer (round " << round << "):\n"
         << serialize_document(previous) << "\n"
         << "The verifier reports:\n";
    for (const FeedbackItem& item : feedback) user << "- " << item.text << '\n';
    user << "\nRevise the graph so that every requirement holds. "
         << "Respond with exactly one graph block.\n\nAnswer:";
    return {{"system", code_style_prefix()}, {"user", user.str()}};
}

VgigResult run_vgig(const InstructionSpec& instr, ChatClient& client,
                    const VgigConfig& config, const RunConfig& run,
                    const std::vector<Message>& round0_prompt) {
    if (config.max_rounds < 1 || config.chains < 1)
        throw std::invalid_argument("VGIG needs max_rounds >= 1 and chains >= 1");

    VgigResult result;
    const ConstraintSet set = instr.constraint_set();

    for (int k = 0; k < config.chains; ++k) {
        const double tau_k = chain_temperature(config.base_temperature, k);
        const double tau_hat = refinement_temperature(tau_k);
        VgigChain chain;
        chain.chain = k;
        int generation = 0;

        auto call = [&](const std::vector<Message>& messages, double temperature)
            -> std::pair<GenerationRecord, bool> {
            GenerationRequest request;
            request.model = run.model;
            request.messages = messages;
            request.temperature = temperature;
            request.top_p = run.top_p;
            request.max_tokens = run.effective_max_tokens();
            request.seed_tag = run.seed_tag;
            request.sample_index = k;
            request.instruction_id = instr.id;
            const ChatResult reply = client.complete(request);
            GenerationRecord record =
                make_generation_record(instr, k, run, request, reply, generation);
            ++generation;
            result.records.push_back(record);
            return {record, reply.ok};
        };

        auto [record0, ok0] = call(round0_prompt, tau_k);
        std::string x_text = record0.response;
        ParseResult x_parsed = parse_response(x_text);
        double s = satisfaction_rate(x_parsed, set);
        chain.rounds.push_back({0, tau_k, x_parsed.ok(), s, 0});

        bool chain_alive = ok0;
        if (chain_alive && instr.feasible) {
            int consecutive_failures = 0;
            for (int t = 1; t <= config.max_rounds; ++t) {
                if (s >= 1.0 - 1e-12) break;
                if (!x_parsed.ok()) {
                    ++consecutive_failures;
                    if (consecutive_failures >= 2) break;
                    auto [record, ok] = call(round0_prompt, tau_k);
                    if (!ok) break;  // permanent failure: end with best-so-far
                    ParseResult candidate = parse_response(record.response);
                    const double s_new = satisfaction_rate(candidate, set);
                    if (s_new > s) {  // strictly better only, like the refinement rule
                        x_text = record.response;
                        x_parsed = std::move(candidate);
                        s = s_new;
                    }
                    chain.rounds.push_back({t, tau_k, x_parsed.ok(), s, 0});
                    continue;
                }
                consecutive_failures = 0;
                const std::vector<FeedbackItem> feedback =
                    generate_feedback(*x_parsed.doc, set, instr, config.feedback);
                if (feedback.empty()) break;
                auto [record, ok] =
                    call(refine_prompt(instr, *x_parsed.doc, feedback, t), tau_hat);
                if (!ok) break;
                ParseResult candidate = parse_response(record.response);
                const double s_new = satisfaction_rate(candidate, set);
                if (s_new > s) {
                    x_text = record.response;
                    x_parsed = std::move(candidate);
                    s = s_new;
                }
                chain.rounds.push_back(
                    {t, tau_hat, candidate.ok(), s, static_cast<int>(feedback.size())});
            }
        }

        chain.final_response = x_text;
        chain.final_satisfaction = s;
        result.chains.push_back(std::move(chain));
    }
    return result;
}

}  // namespace graphbench
