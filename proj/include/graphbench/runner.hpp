// Cached batch execution over a suite: resumable cell runs with a bounded
// worker pool and ordered single-writer commits, cell evaluation into a
// quality summary, and the retry / self-consistency baselines.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphbench/client.hpp"
#include "graphbench/jsonio.hpp"
#include "graphbench/prompts.hpp"
#include "graphbench/scoring.hpp"
#include "graphbench/synthesis.hpp"

namespace graphbench {

struct RunConfig {
    std::string model;
    Strategy strategy = Strategy::zero_shot;
    int samples = 5;
    double temperature = 0.7;
    double top_p = 1.0;
    int seed_tag = 42;  // run-metadata tag; never sent to the provider
    int concurrency = 1;
    std::string cache_dir = "results";
    std::optional<int> max_tokens;  // default provider_max_tokens(model)

    int effective_max_tokens() const;
    std::string cache_path() const;    // {cache_dir}/{model}-{code}.jsonl
    std::string quality_path() const;  // {cache_dir}/{model}-{code}.quality.json
};

// completion_tokens >= 0.99 * max_tokens, boundary inclusive.
bool is_truncated(std::int64_t completion_tokens, int max_tokens);

// One cache record for one completed (or permanently failed) generation.
GenerationRecord make_generation_record(const InstructionSpec& instr, int sample,
                                        const RunConfig& config,
                                        const GenerationRequest& request,
                                        const ChatResult& result, int round);

struct CellTally {
    int requested = 0;  // (instruction, sample) units in scope
    int skipped = 0;    // already present in the cache
    int generated = 0;  // new successful records
    int failed = 0;     // new permanent-failure records
    int parse_failed = 0;
    int truncated = 0;
};

// Issues `samples` generations per instruction in deterministic order,
// appending one record per attempted generation. Existing (id, sample) pairs
// are skipped, so re-running a complete cell performs zero client calls.
CellTally run_cell(const std::vector<InstructionSpec>& suite, const RunConfig& config,
                   ChatClient& client);

// Scores a cell's final records (highest round per (id, sample)) against the
// suite: per-level dimension scores, level aggregates, S_total, TPV
// (completion tokens per valid graph), and mean API calls per sample.
QualitySummary evaluate_cell(const std::vector<InstructionSpec>& suite,
                             const std::vector<GenerationRecord>& records,
                             const std::string& model, const std::string& strategy,
                             const LevelWeights& weights = {});

CellSummary summary_to_cell(const QualitySummary& summary);

// --- baselines --------------------------------------------------------------

struct BaselineOutcome {
    std::vector<GenerationRecord> records;  // one per candidate, round-indexed
    int chosen_index = -1;                  // -1: every candidate unparseable
    std::string final_response;
    double satisfaction = 0.0;
};

// Samples `candidates` completions without feedback and returns the last.
BaselineOutcome retry_baseline(const InstructionSpec& instr,
                               const std::vector<Message>& prompt, ChatClient& client,
                               const RunConfig& config, int candidates = 3);

// Samples `candidates` completions and returns the one with the highest
// satisfaction rate; ties break toward the lowest sample index.
BaselineOutcome self_consistency_baseline(const InstructionSpec& instr,
                                          const std::vector<Message>& prompt,
                                          ChatClient& client, const RunConfig& config,
                                          int candidates = 3);

// Deterministic suite-echo script: replies with one of the instruction's
// references (rotated by sample index); infeasible instructions get an
// infeasibility declaration. The offline stand-in for a live endpoint.
MockClient::Script suite_echo_script(const std::vector<InstructionSpec>& suite);

}  // namespace graphbench
