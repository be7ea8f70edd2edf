// Level aggregation and the cost-efficiency score family: D5, per-level
// weighted dimension mixes, total quality, Pareto frontier membership and
// bonus, frontier distance, Cost@Q, and strategy-sensitivity sigma.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/metrics.hpp"

namespace graphbench {

inline constexpr int kNumLevels = 6;

enum class Strategy { zero_shot, few_shot, zero_cot, few_cot };

std::string to_string(Strategy s);        // "zero_shot", ...
std::string strategy_code(Strategy s);    // "ZS", "FS", "ZC", "FC"
std::optional<Strategy> strategy_from_string(const std::string& text);  // either form

struct LevelWeights {
    std::array<double, kNumLevels> level_weights{0.05, 0.10, 0.15, 0.20, 0.25, 0.25};
    // Rows: level 0..5; columns: d1..d5. Each row sums to 1.
    std::array<std::array<double, 5>, kNumLevels> dim_weights{{
        {0.10, 0.00, 0.00, 0.60, 0.30},
        {0.15, 0.00, 0.00, 0.70, 0.15},
        {0.15, 0.00, 0.00, 0.70, 0.15},
        {0.15, 0.00, 0.15, 0.50, 0.20},
        {0.10, 0.15, 0.05, 0.55, 0.15},
        {0.15, 0.00, 0.15, 0.50, 0.20},
    }};
    double pareto_lambda = 0.15;
    double d5_token_scale = 1000.0;  // s_T
    double d5_call_scale = 2.0;      // s_A
    bool quality_only = false;       // drop d5 and renormalize rows

    // The row actually applied: in quality-only mode d5 is zeroed and the
    // remaining weights are rescaled to sum to 1.
    std::array<double, 5> effective_dim_row(int level) const;
};

// 0.7*exp(-tpv/s_T) + 0.3*exp(-(api_calls-1)/s_A). api_calls must be >= 1
// (at least one call produced the output; fractional means are fine); less
// than one throws.
double score_d5(double tpv, double api_calls, const LevelWeights& weights = {});

// Weighted dimension mix for one level. A dimension with positive effective
// weight must be present in dims; otherwise throws naming the dimension.
double aggregate_level(int level, const DimScores& dims, const LevelWeights& weights);

// S_total = sum_l w_l * S_l.
double aggregate_quality(const std::array<double, kNumLevels>& level_scores,
                         const LevelWeights& weights = {});

struct CellSummary {
    std::string model;
    Strategy strategy = Strategy::zero_shot;
    std::array<double, kNumLevels> level_scores{};
    double s_total = 0.0;
    std::optional<double> tpv;  // absent when the cell produced no valid graph
    double mean_api_calls = 1.0;
    int pareto_bonus = 0;
    double s_final = 0.0;
    std::optional<double> q_per_ktpv;
    std::optional<double> frontier_distance;
};

// Indices of the non-dominated cells in <TPV, S_total>: kept iff no other
// cell has TPV <= and S_total >= with at least one strict. Cells without TPV
// are never frontier members.
std::vector<std::size_t> pareto_frontier(const std::vector<CellSummary>& cells);

double s_final(double s_total, bool on_frontier, double lambda = 0.15);

// Piecewise-linear frontier q* in (log TPV, S_total), flat beyond its
// endpoints; FD = max(0, q*(log tpv) - s_total). Frontier members get 0.
double frontier_distance(const CellSummary& cell,
                         const std::vector<CellSummary>& frontier);

// Fills pareto_bonus, s_final, q_per_ktpv, and frontier_distance in place.
void annotate_cells(std::vector<CellSummary>& cells, double lambda = 0.15);

// Minimum TPV among the model's cells with S_total >= threshold; nullopt =
// never. Cells without TPV cannot qualify.
std::optional<double> cost_at_threshold(const std::vector<CellSummary>& model_cells,
                                        double q_threshold);

// Population (divide-by-N) standard deviation over exactly four strategy
// quality values; any other count throws.
double sigma_strat(const std::vector<double>& quality_values);

enum class Tier { T1, T2, T3 };

std::string to_string(Tier t);

// Threshold banding: >0.87 -> T1, [0.82, 0.87] -> T2, <0.80 -> T3. The
// [0.80, 0.82) gap is indeterminate (nullopt); the model registry carries the
// authoritative published assignment.
std::optional<Tier> tier_from_thresholds(double mean_quality);

}  // namespace graphbench
