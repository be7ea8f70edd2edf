// Deterministic table emission: leaderboards, tier gaps, strategy deltas,
// frontier tables, cost thresholds, regression robustness, ablations, and
// plot-ready data, written as delimiter-separated and structured-record
// files.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphbench/analysis.hpp"

namespace graphbench {

struct ReportInputs {
    // Cell-level results; annotate_cells is applied internally so callers can
    // pass freshly loaded tables.
    std::vector<CellSummary> cells;
    // Model -> tier. When it does not cover the cells (or leaves a tier
    // empty), the tier-gap table is emitted headers-only.
    std::map<std::string, Tier> tier_map;
    // Per-dimension summaries for the weighting and efficiency-scale
    // ablations; empty means those tables are emitted headers-only.
    std::vector<QualitySummary> quality_cells;
    double cost_threshold = 0.8;
};

// Writes every report table into out_dir (created if needed) and returns the
// paths written, in emission order. Identical inputs produce byte-identical
// files; an empty cell set produces headers-only tables.
std::vector<std::string> emit_report(const ReportInputs& inputs,
                                     const std::string& out_dir);

}  // namespace graphbench
