// JSON persistence: instruction-suite files (level_0.json .. level_5.json),
// generation-cache JSONL records, and per-cell quality summaries. The field
// names used here are the stable on-disk contract (see docs/schemas.md).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/metrics.hpp"
#include "graphbench/scoring.hpp"
#include "graphbench/synthesis.hpp"

namespace graphbench {

// --- instruction suites -----------------------------------------------------
// One file per level named "level_<k>.json", each a JSON array of records.

void save_suite(const std::vector<InstructionSpec>& suite, const std::string& directory);
std::vector<InstructionSpec> load_suite(const std::string& directory);

std::string spec_to_json(const InstructionSpec& spec);  // single pretty record
InstructionSpec spec_from_json(const std::string& text);

// --- generation cache -------------------------------------------------------
// Append-only JSONL; one completed generation per line. Refinement traces
// reuse (instruction_id, sample_index) with increasing round numbers; the
// final record of a sample is the one with the highest round.

struct GenerationRecord {
    std::string instruction_id;
    int sample_index = 0;
    std::string model;
    std::string strategy;   // "ZS", "FS", "ZC", "FC" (plus method tags)
    std::string response;   // raw completion text
    std::int64_t prompt_tokens = 0;
    std::int64_t completion_tokens = 0;
    double latency_ms = 0.0;
    std::string timestamp;  // ISO-8601 UTC, informational only
    bool truncated = false;
    bool parse_ok = false;
    int round = 0;          // 0 = initial attempt, >0 = refinement rounds
    int attempts = 1;       // actual HTTP request count behind this record
};

std::string record_to_json(const GenerationRecord& record);  // one line, no newline
GenerationRecord record_from_json(const std::string& line);

void append_records(const std::string& path, const std::vector<GenerationRecord>& records);
// Missing file -> empty vector (a cache that has not been started yet).
std::vector<GenerationRecord> load_records(const std::string& path);

// --- quality summaries ------------------------------------------------------

struct LevelQuality {
    DimScores dims;
    double level_score = 0.0;
    int instructions = 0;  // instructions contributing to this level
};

struct QualitySummary {
    std::string model;
    std::string strategy;
    std::map<int, LevelQuality> levels;
    std::array<double, kNumLevels> level_scores{};
    double s_total = 0.0;            // aggregate under the evaluation weights
    std::optional<double> tpv;       // completion tokens per valid graph
    double mean_api_calls = 1.0;
    std::int64_t completion_tokens = 0;
    int valid_graphs = 0;
};

void save_quality(const QualitySummary& summary, const std::string& path);
QualitySummary load_quality(const std::string& path);

}  // namespace graphbench
