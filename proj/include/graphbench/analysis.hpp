// Leaderboard assembly, tier gaps, strategy deltas, oracle composition,
// regression robustness, weighting ablations, efficiency-scale ablations, and
// grouped cross-validation of strategy selection.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/jsonio.hpp"
#include "graphbench/scoring.hpp"
#include "graphbench/stats.hpp"
#include "graphbench/synthesis.hpp"

namespace graphbench {

// ---------------------------------------------------------------------------
// Leaderboards

enum class LeaderboardKey { s_total, s_final, q_per_ktpv };

std::string to_string(LeaderboardKey key);

struct Leaderboard {
    LeaderboardKey key = LeaderboardKey::s_total;
    std::optional<Strategy> filter;
    std::vector<CellSummary> rows;  // key descending; ties (model, strategy)
};

// Sort cells by the chosen key, descending, ties broken by (model, strategy)
// lexicographic. Rows lacking the key's value (q_per_ktpv absent) sink to the
// bottom in tie order. The optional filter keeps a single strategy.
Leaderboard leaderboard(const std::vector<CellSummary>& cells, LeaderboardKey key,
                        std::optional<Strategy> filter = std::nullopt);

// ---------------------------------------------------------------------------
// Tier gaps

enum class TierGapMode { best_of_four, all_strategy_avg };

std::string to_string(TierGapMode mode);

struct TierGapReport {
    TierGapMode mode = TierGapMode::best_of_four;
    // Per-level tier means; a model contributes its best (or average) level
    // score over whatever strategy cells it has.
    std::array<double, kNumLevels> t1_mean{};
    std::array<double, kNumLevels> t2_mean{};
    std::array<double, kNumLevels> t3_mean{};
    std::array<double, kNumLevels> gap{};  // t1_mean - t3_mean
};

// Per-level tier means and the T1-T3 gap under one of the two uniform
// aggregation modes. Models absent from the tier map or tiers with no cells
// raise invalid_argument.
TierGapReport tier_gaps(const std::vector<CellSummary>& cells,
                        const std::map<std::string, Tier>& tier_map, TierGapMode mode);

// ---------------------------------------------------------------------------
// Strategy deltas

// Delta rows are indexed in this order, each measured against zero-shot.
inline constexpr std::array<Strategy, 3> kDeltaVariants{
    Strategy::few_shot, Strategy::zero_cot, Strategy::few_cot};

struct SignTally {
    int positive = 0;
    int negative = 0;
    int ties = 0;
};

struct StrategyDeltaReport {
    std::vector<std::string> models;     // fully-evaluated models, sorted
    std::vector<std::string> warnings;   // excluded models and the reason
    double tie_band = 0.005;
    // [variant][level]: mean over the included models of (variant - ZS).
    std::array<std::array<double, kNumLevels>, 3> mean_delta{};
    // [variant][level]: per-model sign tallies with the tie band applied.
    std::array<std::array<SignTally, kNumLevels>, 3> signs{};
};

// Per-level FS/ZC/FC-minus-ZS means and sign counts across every model that
// has all four strategy cells; models missing a strategy are excluded with a
// warning line.
StrategyDeltaReport strategy_deltas(const std::vector<CellSummary>& cells,
                                    double tie_band = 0.005);

// ---------------------------------------------------------------------------
// Oracle strategy selection

struct OracleResult {
    std::string model;
    std::array<double, kNumLevels> level_scores{};  // max over strategies
    std::array<Strategy, kNumLevels> chosen{};      // argmax per level
    double q = 0.0;                                 // weighted aggregate
};

// Per-level best-of-strategy composition for one model. Requires all four
// strategy cells of a single model; anything else raises invalid_argument.
OracleResult oracle_per_level(const std::vector<CellSummary>& model_cells,
                              const LevelWeights& weights = {});

// ---------------------------------------------------------------------------
// Regression with robustness

struct ModelSpread {
    std::string model;
    double mean_quality = 0.0;  // mean S_total over the four strategies
    double sigma = 0.0;         // population sigma over the four
};

// One point per model holding all four strategy cells; models with fewer are
// skipped. Sorted by model name.
std::vector<ModelSpread> model_spreads(const std::vector<CellSummary>& cells);

struct RegressionResult {
    OlsFit fit;
    BootstrapSlope bootstrap;
    LooRange loo;
};

// OLS of y on x plus a 10,000-resample bootstrap CI / P(slope<0) and the
// leave-one-out slope range. Degenerate x-variance raises invalid_argument.
RegressionResult ols_with_robustness(const std::vector<double>& x,
                                     const std::vector<double>& y,
                                     int resamples = 10000, std::uint64_t seed = 42);

// Bootstrap CI of the mean per-instruction difference (default 1,000
// resamples). Empty input raises invalid_argument.
BootstrapMean paired_bootstrap(const std::vector<double>& diffs, int resamples = 1000,
                               std::uint64_t seed = 42);

// ---------------------------------------------------------------------------
// Weighting ablation

struct WeightScheme {
    std::string name;
    // Rows: level 0..5; columns d1..d5. The ablation re-ranks quality-only,
    // so the d5 column must be zero and each row must sum to 1.
    std::array<std::array<double, 5>, kNumLevels> rows{};

    static WeightScheme default_quality();          // default mix, d5 dropped
    static WeightScheme d4_boosted(double delta = 0.05);
    static WeightScheme uniform_active();           // equal over active dims
    static WeightScheme single_dimension(int dim_index, const std::string& name);
    static std::vector<WeightScheme> standard_set();  // the five published rows
};

struct SchemeComparison {
    std::string scheme;
    int top9_retained = 0;        // overlap with the default top-9
    int top15_retained = 0;
    double top15_jaccard = 1.0;
    int max_rank_shift = 0;
    double rank_spearman = 1.0;
};

struct WeightPerturbationReport {
    std::vector<SchemeComparison> schemes;
};

// Re-rank the cells quality-only under each scheme and compare against the
// default-quality ranking. A scheme row that does not sum to 1 (or carries
// d5 weight) raises invalid_argument.
WeightPerturbationReport weight_perturbation(const std::vector<QualitySummary>& cells,
                                             const std::vector<WeightScheme>& schemes);

// ---------------------------------------------------------------------------
// Efficiency-scale ablation

struct D5GridCell {
    double token_scale = 0.0;  // s_T
    double call_scale = 0.0;   // s_A
    double spearman = 1.0;
    double kendall = 1.0;
    bool top1_same = true;
    double top5_jaccard = 1.0;
};

// Re-score every cell with d5 recomputed under each (s_T, s_A) pair and
// compare the full-score ranking against the default scales (1000, 2).
std::vector<D5GridCell> d5_scale_grid(
    const std::vector<QualitySummary>& cells,
    const std::vector<double>& token_scales = {500.0, 1000.0, 2000.0},
    const std::vector<double>& call_scales = {1.0, 2.0, 4.0});

// ---------------------------------------------------------------------------
// Cross-validated strategy selection

enum class GroupingMode { ec_only, prefix_ec };

std::string to_string(GroupingMode mode);

// Template identity used to keep near-duplicate instructions in one fold:
// the constraint-property key, optionally extended with the first eight
// non-number instruction tokens.
std::string grouping_key(const InstructionSpec& spec, GroupingMode mode);

int count_templates(const std::vector<InstructionSpec>& suite, GroupingMode mode);

// strategy -> instruction id -> per-instruction quality score.
using PerInstructionScores = std::map<Strategy, std::map<std::string, double>>;

struct CvFoldDetail {
    int fold = 0;
    std::array<std::optional<Strategy>, kNumLevels> chosen{};
    int holdout_instructions = 0;
};

struct CvOracleReport {
    GroupingMode grouping = GroupingMode::ec_only;
    int folds = 0;
    int templates = 0;
    double full_q = 0.0;  // oracle picked and evaluated on the full data
    double cv_q = 0.0;    // holdout-pooled oracle
    int disagreements = 0;  // (fold, level) picks differing from the full pick
    std::array<std::optional<Strategy>, kNumLevels> full_choice{};
    std::vector<CvFoldDetail> fold_details;
};

// Grouped, level-stratified k-fold cross-validation of per-level strategy
// selection: instructions sharing a grouping key always land in the same
// fold; the best train-fold strategy is re-evaluated on the holdout. Raises
// invalid_argument when scores are missing for a suite instruction and
// runtime_error when a fold would empty a level (for instance when a level
// has fewer templates than folds).
CvOracleReport cv_oracle(const PerInstructionScores& scores,
                         const std::vector<InstructionSpec>& suite, int folds = 5,
                         GroupingMode grouping = GroupingMode::ec_only,
                         std::uint64_t seed = 42, const LevelWeights& weights = {});

// ---------------------------------------------------------------------------
// Fixture tables

// CSV with header model,strategy,s_total,l0,l1,l2,l3,l4,l5. '#' lines and
// blanks are skipped. TPV stays unset; merge it from load_tpv_csv.
std::vector<CellSummary> load_cells_csv(const std::string& path);

// CSV with header model,strategy,tpv.
std::map<std::pair<std::string, std::string>, double> load_tpv_csv(
    const std::string& path);

// Sets cell.tpv for every (model, strategy code) present in the map.
void apply_tpv(std::vector<CellSummary>& cells,
               const std::map<std::pair<std::string, std::string>, double>& tpv);

// CSV with header model,tier[,...]; tier spelled T1/T2/T3.
std::map<std::string, Tier> load_tier_map_csv(const std::string& path);

}  // namespace graphbench
