// Verification-guided iterative generation: multi-chain refinement with
// programmatic feedback at three granularities, jittered per-chain
// temperatures, and round-indexed traces.
#pragma once

#include <string>
#include <vector>

#include "graphbench/client.hpp"
#include "graphbench/constraints.hpp"
#include "graphbench/jsonio.hpp"
#include "graphbench/runner.hpp"
#include "graphbench/synthesis.hpp"

namespace graphbench {

enum class FeedbackLevel { none, coarse, fine };

std::string to_string(FeedbackLevel level);
std::optional<FeedbackLevel> feedback_from_string(const std::string& text);

struct VgigConfig {
    int max_rounds = 3;  // T; the sweep covers {1, 2, 3, 5, 7, 10, 15, 20}
    int chains = 3;      // K
    FeedbackLevel feedback = FeedbackLevel::fine;
    double base_temperature = 0.7;  // tau
};

// Round-0 chain temperature: clip(tau + delta_k, [0.1, 1.5]) with offsets
// (-0.10, 0.00, +0.10, -0.05, +0.05) cycling over chains.
double chain_temperature(double base, int chain);
// Refinement temperature: max(0.2, 0.6 * chain_temperature).
double refinement_temperature(double chain_temp);

struct FeedbackItem {
    Violation violation;  // default-constructed for the binary marker
    std::string text;
    FeedbackLevel granularity = FeedbackLevel::fine;
};

// none: empty when satisfied, else one binary marker. coarse: one item per
// violation naming the level's category framing. fine: coarse plus expected/
// observed/delta and level extras (joint-incompatibility flags at L2,
// tolerance bands at L3, domain-baseline comparison at L4, step-wise edit
// credit and base-graph diff at L5).
std::vector<FeedbackItem> generate_feedback(const GraphDoc& doc, const ConstraintSet& set,
                                            const InstructionSpec& instr,
                                            FeedbackLevel granularity);

// The structured refinement message: previous graph (canonical serialization),
// rendered feedback list, and the round counter.
std::vector<Message> refine_prompt(const InstructionSpec& instr, const GraphDoc& previous,
                                   const std::vector<FeedbackItem>& feedback, int round);

struct VgigRound {
    int round = 0;  // 0 = initial generation
    double temperature = 0.0;
    bool parse_ok = false;
    double satisfaction = 0.0;  // best-so-far after this round
    int feedback_items = 0;
};

struct VgigChain {
    int chain = 0;
    std::vector<VgigRound> rounds;
    std::string final_response;
    double final_satisfaction = 0.0;
};

struct VgigResult {
    std::vector<VgigChain> chains;
    std::vector<GenerationRecord> records;  // one per generation, round-indexed
};

// The refinement loop. Per chain: round-0 generation at the chain
// temperature; infeasible instructions emit round 0 and stop; thereafter up
// to T rounds, stopping on satisfaction 1, empty feedback, two consecutive
// parse failures, or client permanent failure; parse failures regenerate
// from the round-0 prompt at the chain temperature; refinements run at the
// lowered temperature; a candidate replaces the incumbent only when strictly
// better. At most T+1 generations per chain. Records carry sample_index =
// chain and sequential round numbers.
VgigResult run_vgig(const InstructionSpec& instr, ChatClient& client,
                    const VgigConfig& config, const RunConfig& run,
                    const std::vector<Message>& round0_prompt);

}  // namespace graphbench
