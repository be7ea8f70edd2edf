// Analysis over evaluated cells: leaderboards, tier gaps, strategy deltas,
// oracle composition, regression robustness, ablations, cross-validation,
// and the fixture-table readers.
#include "graphbench/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graphbench/rng.hpp"
#include "graphbench/templates.hpp"

namespace graphbench {

namespace {

constexpr double kRowSumTolerance = 1e-9;

bool cell_identity_less(const CellSummary& a, const CellSummary& b) {
    if (a.model != b.model) return a.model < b.model;
    return strategy_code(a.strategy) < strategy_code(b.strategy);
}

std::optional<double> key_value(const CellSummary& cell, LeaderboardKey key) {
    switch (key) {
        case LeaderboardKey::s_total: return cell.s_total;
        case LeaderboardKey::s_final: return cell.s_final;
        case LeaderboardKey::q_per_ktpv: return cell.q_per_ktpv;
    }
    return std::nullopt;
}

// Cells of one model keyed by strategy; duplicates are an input error.
std::map<Strategy, const CellSummary*> cells_by_strategy(
    const std::vector<const CellSummary*>& cells) {
    std::map<Strategy, const CellSummary*> by_strategy;
    for (const CellSummary* cell : cells) {
        if (!by_strategy.emplace(cell->strategy, cell).second)
            throw std::invalid_argument("duplicate cell for " + cell->model + " " +
                                        strategy_code(cell->strategy));
    }
    return by_strategy;
}

std::map<std::string, std::vector<const CellSummary*>> group_by_model(
    const std::vector<CellSummary>& cells) {
    std::map<std::string, std::vector<const CellSummary*>> groups;
    for (const CellSummary& cell : cells) groups[cell.model].push_back(&cell);
    return groups;
}

void validate_scheme(const WeightScheme& scheme) {
    for (int level = 0; level < kNumLevels; ++level) {
        const auto& row = scheme.rows[level];
        if (row[4] != 0.0)
            throw std::invalid_argument("scheme '" + scheme.name +
                                        "' carries d5 weight; the ablation re-ranks "
                                        "quality-only");
        const double sum = std::accumulate(row.begin(), row.end(), 0.0);
        if (std::fabs(sum - 1.0) > kRowSumTolerance)
            throw std::invalid_argument("scheme '" + scheme.name + "' level " +
                                        std::to_string(level) + " row sums to " +
                                        std::to_string(sum) + ", not 1");
    }
}

// Quality-only aggregate of one summary under a scheme's dimension rows.
double scheme_quality(const QualitySummary& summary, const WeightScheme& scheme) {
    LevelWeights weights;
    weights.dim_weights = scheme.rows;
    std::array<double, kNumLevels> level_scores{};
    for (const auto& [level, quality] : summary.levels) {
        if (level < 0 || level >= kNumLevels) continue;
        if (quality.instructions <= 0) continue;
        level_scores[level] = aggregate_level(level, quality.dims, weights);
    }
    return aggregate_quality(level_scores, weights);
}

// Indices of `cells` sorted by score descending, ties by (model, strategy).
std::vector<std::size_t> ranking_order(const std::vector<QualitySummary>& cells,
                                       const std::vector<double>& scores) {
    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        if (cells[a].model != cells[b].model) return cells[a].model < cells[b].model;
        return cells[a].strategy < cells[b].strategy;
    });
    return order;
}

int top_overlap(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                std::size_t k) {
    k = std::min({k, a.size(), b.size()});
    const std::set<std::size_t> top_a(a.begin(), a.begin() + k);
    int overlap = 0;
    for (std::size_t i = 0; i < k; ++i) overlap += top_a.count(b[i]) ? 1 : 0;
    return overlap;
}

double top_jaccard(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                   std::size_t k) {
    k = std::min({k, a.size(), b.size()});
    if (k == 0) return 1.0;
    const int inter = top_overlap(a, b, k);
    return static_cast<double>(inter) / static_cast<double>(2 * k - inter);
}

std::vector<double> ranks_of(const std::vector<std::size_t>& order, std::size_t n) {
    std::vector<double> ranks(n, 0.0);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        ranks[order[pos]] = static_cast<double>(pos + 1);
    return ranks;
}

std::string csv_trim(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return text.substr(begin, end - begin);
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(csv_trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

// Data lines of a CSV file: blank lines and '#' comments skipped, the header
// validated against the expected prefix.
std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::string& header_prefix) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = csv_trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        if (!saw_header) {
            if (trimmed.rfind(header_prefix, 0) != 0)
                throw std::runtime_error(path + ": expected header starting '" +
                                         header_prefix + "', got '" + trimmed + "'");
            saw_header = true;
            continue;
        }
        rows.push_back(csv_fields(trimmed));
    }
    if (!saw_header) throw std::runtime_error(path + ": no header line");
    return rows;
}

Strategy parse_strategy_field(const std::string& text, const std::string& path) {
    const std::optional<Strategy> strategy = strategy_from_string(text);
    if (!strategy) throw std::runtime_error(path + ": unknown strategy '" + text + "'");
    return *strategy;
}

}  // namespace

// ---------------------------------------------------------------------------
// Leaderboards

std::string to_string(LeaderboardKey key) {
    switch (key) {
        case LeaderboardKey::s_total: return "s_total";
        case LeaderboardKey::s_final: return "s_final";
        case LeaderboardKey::q_per_ktpv: return "q_per_ktpv";
    }
    return "?";
}

Leaderboard leaderboard(const std::vector<CellSummary>& cells, LeaderboardKey key,
                        std::optional<Strategy> filter) {
    Leaderboard board;
    board.key = key;
    board.filter = filter;
    for (const CellSummary& cell : cells)
        if (!filter || cell.strategy == *filter) board.rows.push_back(cell);
    std::stable_sort(board.rows.begin(), board.rows.end(),
                     [key](const CellSummary& a, const CellSummary& b) {
                         const std::optional<double> va = key_value(a, key);
                         const std::optional<double> vb = key_value(b, key);
                         if (va.has_value() != vb.has_value()) return va.has_value();
                         if (va && vb && *va != *vb) return *va > *vb;
                         return cell_identity_less(a, b);
                     });
    return board;
}

// ---------------------------------------------------------------------------
// Tier gaps

std::string to_string(TierGapMode mode) {
    return mode == TierGapMode::best_of_four ? "best_of_four" : "all_strategy_avg";
}

TierGapReport tier_gaps(const std::vector<CellSummary>& cells,
                        const std::map<std::string, Tier>& tier_map, TierGapMode mode) {
    TierGapReport report;
    report.mode = mode;
    std::array<std::array<double, kNumLevels>, 3> tier_sum{};
    std::array<int, 3> tier_models{};
    for (const auto& [model, model_cells] : group_by_model(cells)) {
        const auto tier_it = tier_map.find(model);
        if (tier_it == tier_map.end())
            throw std::invalid_argument("model '" + model + "' missing from tier map");
        const int tier = static_cast<int>(tier_it->second);
        ++tier_models[tier];
        for (int level = 0; level < kNumLevels; ++level) {
            double value = 0.0;
            if (mode == TierGapMode::best_of_four) {
                for (const CellSummary* cell : model_cells)
                    value = std::max(value, cell->level_scores[level]);
            } else {
                for (const CellSummary* cell : model_cells)
                    value += cell->level_scores[level];
                value /= static_cast<double>(model_cells.size());
            }
            tier_sum[tier][level] += value;
        }
    }
    for (int tier = 0; tier < 3; ++tier)
        if (tier_models[tier] == 0)
            throw std::invalid_argument("tier T" + std::to_string(tier + 1) +
                                        " has no cells");
    for (int level = 0; level < kNumLevels; ++level) {
        report.t1_mean[level] = tier_sum[0][level] / tier_models[0];
        report.t2_mean[level] = tier_sum[1][level] / tier_models[1];
        report.t3_mean[level] = tier_sum[2][level] / tier_models[2];
        report.gap[level] = report.t1_mean[level] - report.t3_mean[level];
    }
    return report;
}

// ---------------------------------------------------------------------------
// Strategy deltas

StrategyDeltaReport strategy_deltas(const std::vector<CellSummary>& cells,
                                    double tie_band) {
    StrategyDeltaReport report;
    report.tie_band = tie_band;
    std::vector<std::map<Strategy, const CellSummary*>> included;
    for (const auto& [model, model_cells] : group_by_model(cells)) {
        auto by_strategy = cells_by_strategy(model_cells);
        std::vector<std::string> missing;
        for (const Strategy s : {Strategy::zero_shot, Strategy::few_shot,
                                 Strategy::zero_cot, Strategy::few_cot})
            if (!by_strategy.count(s)) missing.push_back(strategy_code(s));
        if (!missing.empty()) {
            std::string joined;
            for (const std::string& code : missing)
                joined += (joined.empty() ? "" : ", ") + code;
            report.warnings.push_back("excluded " + model + ": missing " + joined);
            continue;
        }
        report.models.push_back(model);
        included.push_back(std::move(by_strategy));
    }
    if (included.empty()) return report;
    for (std::size_t v = 0; v < kDeltaVariants.size(); ++v) {
        for (int level = 0; level < kNumLevels; ++level) {
            double sum = 0.0;
            for (const auto& by_strategy : included) {
                const double delta =
                    by_strategy.at(kDeltaVariants[v])->level_scores[level] -
                    by_strategy.at(Strategy::zero_shot)->level_scores[level];
                sum += delta;
                switch (sign_with_band(delta, tie_band)) {
                    case 1: ++report.signs[v][level].positive; break;
                    case -1: ++report.signs[v][level].negative; break;
                    default: ++report.signs[v][level].ties; break;
                }
            }
            report.mean_delta[v][level] = sum / static_cast<double>(included.size());
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Oracle strategy selection

OracleResult oracle_per_level(const std::vector<CellSummary>& model_cells,
                              const LevelWeights& weights) {
    if (model_cells.empty()) throw std::invalid_argument("no cells given");
    OracleResult result;
    result.model = model_cells.front().model;
    std::vector<const CellSummary*> pointers;
    for (const CellSummary& cell : model_cells) {
        if (cell.model != result.model)
            throw std::invalid_argument("oracle mixes models: " + result.model +
                                        " vs " + cell.model);
        pointers.push_back(&cell);
    }
    const auto by_strategy = cells_by_strategy(pointers);
    if (by_strategy.size() != 4)
        throw std::invalid_argument("oracle needs all four strategy cells for " +
                                    result.model + "; got " +
                                    std::to_string(by_strategy.size()));
    for (int level = 0; level < kNumLevels; ++level) {
        double best = -1.0;
        Strategy chosen = Strategy::zero_shot;
        for (const auto& [strategy, cell] : by_strategy) {
            if (cell->level_scores[level] > best) {
                best = cell->level_scores[level];
                chosen = strategy;
            }
        }
        result.level_scores[level] = best;
        result.chosen[level] = chosen;
    }
    result.q = aggregate_quality(result.level_scores, weights);
    return result;
}

// ---------------------------------------------------------------------------
// Regression with robustness

std::vector<ModelSpread> model_spreads(const std::vector<CellSummary>& cells) {
    std::vector<ModelSpread> spreads;
    for (const auto& [model, model_cells] : group_by_model(cells)) {
        const auto by_strategy = cells_by_strategy(model_cells);
        if (by_strategy.size() != 4) continue;
        std::vector<double> quality;
        for (const auto& [strategy, cell] : by_strategy)
            quality.push_back(cell->s_total);
        ModelSpread spread;
        spread.model = model;
        spread.mean_quality =
            std::accumulate(quality.begin(), quality.end(), 0.0) / quality.size();
        spread.sigma = sigma_strat(quality);
        spreads.push_back(spread);
    }
    return spreads;  // std::map iteration already sorts by model
}

RegressionResult ols_with_robustness(const std::vector<double>& x,
                                     const std::vector<double>& y, int resamples,
                                     std::uint64_t seed) {
    RegressionResult result;
    result.fit = ols_fit(x, y);
    result.bootstrap = bootstrap_slope(x, y, resamples, seed);
    result.loo = loo_slope_range(x, y);
    return result;
}

BootstrapMean paired_bootstrap(const std::vector<double>& diffs, int resamples,
                               std::uint64_t seed) {
    if (diffs.empty()) throw std::invalid_argument("paired bootstrap needs data");
    return bootstrap_mean(diffs, resamples, seed);
}

// ---------------------------------------------------------------------------
// Weighting ablation

WeightScheme WeightScheme::default_quality() {
    WeightScheme scheme;
    scheme.name = "default";
    LevelWeights weights;
    weights.quality_only = true;
    for (int level = 0; level < kNumLevels; ++level)
        scheme.rows[level] = weights.effective_dim_row(level);
    return scheme;
}

WeightScheme WeightScheme::d4_boosted(double delta) {
    WeightScheme scheme = default_quality();
    scheme.name = "d4+" + std::to_string(delta).substr(0, 4);
    for (auto& row : scheme.rows) {
        row[3] += delta;
        const double sum = std::accumulate(row.begin(), row.end(), 0.0);
        for (double& w : row) w /= sum;
    }
    return scheme;
}

WeightScheme WeightScheme::uniform_active() {
    WeightScheme scheme = default_quality();
    scheme.name = "uniform";
    for (auto& row : scheme.rows) {
        int active = 0;
        for (int d = 0; d < 4; ++d) active += row[d] > 0.0 ? 1 : 0;
        for (int d = 0; d < 4; ++d) row[d] = row[d] > 0.0 ? 1.0 / active : 0.0;
    }
    return scheme;
}

WeightScheme WeightScheme::single_dimension(int dim_index, const std::string& name) {
    if (dim_index < 0 || dim_index > 3)
        throw std::invalid_argument("single-dimension scheme must pick d1..d4");
    WeightScheme scheme;
    scheme.name = name;
    for (auto& row : scheme.rows) {
        row = {0.0, 0.0, 0.0, 0.0, 0.0};
        row[dim_index] = 1.0;
    }
    return scheme;
}

std::vector<WeightScheme> WeightScheme::standard_set() {
    return {default_quality(), d4_boosted(0.05), uniform_active(),
            single_dimension(3, "d4-only"), single_dimension(0, "d1-only")};
}

WeightPerturbationReport weight_perturbation(const std::vector<QualitySummary>& cells,
                                             const std::vector<WeightScheme>& schemes) {
    const WeightScheme baseline = WeightScheme::default_quality();
    validate_scheme(baseline);
    std::vector<double> base_scores(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        base_scores[i] = scheme_quality(cells[i], baseline);
    const std::vector<std::size_t> base_order = ranking_order(cells, base_scores);
    const std::vector<double> base_ranks = ranks_of(base_order, cells.size());

    WeightPerturbationReport report;
    for (const WeightScheme& scheme : schemes) {
        validate_scheme(scheme);
        std::vector<double> scores(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i)
            scores[i] = scheme_quality(cells[i], scheme);
        const std::vector<std::size_t> order = ranking_order(cells, scores);
        const std::vector<double> ranks = ranks_of(order, cells.size());

        SchemeComparison comparison;
        comparison.scheme = scheme.name;
        comparison.top9_retained = top_overlap(base_order, order, 9);
        comparison.top15_retained = top_overlap(base_order, order, 15);
        comparison.top15_jaccard = top_jaccard(base_order, order, 15);
        int max_shift = 0;
        for (std::size_t i = 0; i < cells.size(); ++i)
            max_shift = std::max(
                max_shift, static_cast<int>(std::fabs(base_ranks[i] - ranks[i])));
        comparison.max_rank_shift = max_shift;
        comparison.rank_spearman =
            cells.size() >= 2 ? spearman_rho(base_ranks, ranks) : 1.0;
        report.schemes.push_back(comparison);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Efficiency-scale ablation

namespace {

// Full-score column with d5 recomputed from the cell's TPV and call count
// under the given scales. Cells with no valid graphs keep d5 = 0.
std::vector<double> d5_rescored(const std::vector<QualitySummary>& cells,
                                double token_scale, double call_scale) {
    LevelWeights weights;
    weights.d5_token_scale = token_scale;
    weights.d5_call_scale = call_scale;
    std::vector<double> scores(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const QualitySummary& cell = cells[i];
        const double d5 =
            cell.tpv ? score_d5(*cell.tpv, cell.mean_api_calls, weights) : 0.0;
        std::array<double, kNumLevels> level_scores{};
        for (const auto& [level, quality] : cell.levels) {
            if (level < 0 || level >= kNumLevels || quality.instructions <= 0) continue;
            DimScores dims = quality.dims;
            dims.d5 = d5;
            level_scores[level] = aggregate_level(level, dims, weights);
        }
        scores[i] = aggregate_quality(level_scores, weights);
    }
    return scores;
}

}  // namespace

std::vector<D5GridCell> d5_scale_grid(const std::vector<QualitySummary>& cells,
                                      const std::vector<double>& token_scales,
                                      const std::vector<double>& call_scales) {
    const std::vector<double> base = d5_rescored(cells, 1000.0, 2.0);
    std::vector<std::size_t> base_order;
    {
        std::vector<double> copy = base;
        base_order = ranking_order(cells, copy);
    }
    std::vector<D5GridCell> grid;
    for (const double token_scale : token_scales) {
        for (const double call_scale : call_scales) {
            const std::vector<double> scores = d5_rescored(cells, token_scale, call_scale);
            const std::vector<std::size_t> order = ranking_order(cells, scores);
            D5GridCell entry;
            entry.token_scale = token_scale;
            entry.call_scale = call_scale;
            if (cells.size() >= 2) {
                entry.spearman = spearman_rho(base, scores);
                entry.kendall = kendall_tau(base, scores);
            }
            entry.top1_same = cells.empty() || order.front() == base_order.front();
            entry.top5_jaccard = top_jaccard(base_order, order, 5);
            grid.push_back(entry);
        }
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Cross-validated strategy selection

std::string to_string(GroupingMode mode) {
    return mode == GroupingMode::ec_only ? "ec_only" : "prefix_ec";
}

std::string grouping_key(const InstructionSpec& spec, GroupingMode mode) {
    std::string key = template_key(spec);
    if (mode == GroupingMode::prefix_ec) {
        key += "|";
        int taken = 0;
        for (const std::string& token : tokenize_text(spec.instruction)) {
            if (token.find_first_not_of("0123456789") == std::string::npos) continue;
            key += token + "-";
            if (++taken == 8) break;
        }
    }
    return key;
}

int count_templates(const std::vector<InstructionSpec>& suite, GroupingMode mode) {
    std::set<std::string> keys;
    for (const InstructionSpec& spec : suite) keys.insert(grouping_key(spec, mode));
    return static_cast<int>(keys.size());
}

CvOracleReport cv_oracle(const PerInstructionScores& scores,
                         const std::vector<InstructionSpec>& suite, int folds,
                         GroupingMode grouping, std::uint64_t seed,
                         const LevelWeights& weights) {
    if (folds < 2) throw std::invalid_argument("cross-validation needs >= 2 folds");
    if (scores.empty()) throw std::invalid_argument("no strategy scores given");
    if (suite.empty()) throw std::invalid_argument("empty suite");
    for (const auto& [strategy, per_id] : scores)
        for (const InstructionSpec& spec : suite)
            if (!per_id.count(spec.id))
                throw std::invalid_argument("missing score for instruction " + spec.id +
                                            " under strategy " + strategy_code(strategy));

    CvOracleReport report;
    report.grouping = grouping;
    report.folds = folds;
    report.templates = count_templates(suite, grouping);

    // Group instructions by template within each level.
    std::map<int, std::map<std::string, std::vector<const InstructionSpec*>>> by_level;
    for (const InstructionSpec& spec : suite)
        by_level[spec.level][grouping_key(spec, grouping)].push_back(&spec);

    // Level-stratified greedy assignment: groups shuffled per level, each
    // placed on the currently lightest fold so templates never straddle folds.
    std::map<const InstructionSpec*, int> fold_of;
    for (const auto& [level, groups] : by_level) {
        std::vector<std::string> keys;
        for (const auto& [key, members] : groups) keys.push_back(key);
        RngStream rng(seed, "cv-fold:level-" + std::to_string(level));
        rng.shuffle(keys);
        std::vector<int> load(folds, 0);
        for (const std::string& key : keys) {
            const int fold = static_cast<int>(
                std::min_element(load.begin(), load.end()) - load.begin());
            for (const InstructionSpec* spec : groups.at(key)) fold_of[spec] = fold;
            load[fold] += static_cast<int>(groups.at(key).size());
        }
        for (int fold = 0; fold < folds; ++fold)
            if (load[fold] == 0)
                throw std::runtime_error(
                    "fold " + std::to_string(fold) + " holds no instructions at level " +
                    std::to_string(level) + " (level has " +
                    std::to_string(keys.size()) + " templates for " +
                    std::to_string(folds) + " folds)");
    }

    // Score totals per (level, strategy): overall and per fold.
    struct Totals {
        double sum = 0.0;
        int count = 0;
    };
    std::map<int, std::map<Strategy, Totals>> overall;
    std::map<int, std::map<int, std::map<Strategy, Totals>>> per_fold;  // fold->level
    std::map<int, int> level_count;
    for (const InstructionSpec& spec : suite) {
        ++level_count[spec.level];
        for (const auto& [strategy, per_id] : scores) {
            const double value = per_id.at(spec.id);
            Totals& all = overall[spec.level][strategy];
            all.sum += value;
            ++all.count;
            Totals& fold = per_fold[fold_of.at(&spec)][spec.level][strategy];
            fold.sum += value;
            ++fold.count;
        }
    }

    const auto best_strategy = [](const std::map<Strategy, Totals>& totals)
        -> std::pair<Strategy, double> {
        Strategy chosen = totals.begin()->first;
        double best = -1.0;
        for (const auto& [strategy, t] : totals) {
            const double mean = t.count > 0 ? t.sum / t.count : 0.0;
            if (mean > best) {
                best = mean;
                chosen = strategy;
            }
        }
        return {chosen, best};
    };

    // Full-data oracle.
    double full_q = 0.0;
    for (const auto& [level, totals] : overall) {
        const auto [chosen, mean] = best_strategy(totals);
        report.full_choice[level] = chosen;
        full_q += weights.level_weights[level] * mean;
    }
    report.full_q = full_q;

    // Per-fold train selection evaluated on the holdout, pooled per level.
    std::map<int, double> pooled;
    for (int fold = 0; fold < folds; ++fold) {
        CvFoldDetail detail;
        detail.fold = fold;
        for (const auto& [level, totals] : overall) {
            std::map<Strategy, Totals> train;
            const auto fold_it = per_fold.find(fold);
            for (const auto& [strategy, all] : totals) {
                Totals t = all;
                if (fold_it != per_fold.end()) {
                    const auto level_it = fold_it->second.find(level);
                    if (level_it != fold_it->second.end()) {
                        const auto strat_it = level_it->second.find(strategy);
                        if (strat_it != level_it->second.end()) {
                            t.sum -= strat_it->second.sum;
                            t.count -= strat_it->second.count;
                        }
                    }
                }
                train[strategy] = t;
            }
            const auto [chosen, mean] = best_strategy(train);
            (void)mean;
            detail.chosen[level] = chosen;
            if (report.full_choice[level] && *report.full_choice[level] != chosen)
                ++report.disagreements;
            const auto holdout = per_fold[fold][level].find(chosen);
            if (holdout != per_fold[fold][level].end()) {
                pooled[level] += holdout->second.sum;
                detail.holdout_instructions += holdout->second.count;
            }
        }
        report.fold_details.push_back(detail);
    }
    double cv_q = 0.0;
    for (const auto& [level, sum] : pooled)
        cv_q += weights.level_weights[level] * (sum / level_count.at(level));
    report.cv_q = cv_q;
    return report;
}

// ---------------------------------------------------------------------------
// Fixture tables

std::vector<CellSummary> load_cells_csv(const std::string& path) {
    std::vector<CellSummary> cells;
    for (const auto& fields : read_csv(path, "model,strategy,s_total,l0")) {
        if (fields.size() != 9)
            throw std::runtime_error(path + ": expected 9 fields, got " +
                                     std::to_string(fields.size()));
        CellSummary cell;
        cell.model = fields[0];
        cell.strategy = parse_strategy_field(fields[1], path);
        cell.s_total = std::stod(fields[2]);
        for (int level = 0; level < kNumLevels; ++level)
            cell.level_scores[level] = std::stod(fields[3 + level]);
        cell.s_final = cell.s_total;  // bonus assigned by annotate_cells
        cells.push_back(cell);
    }
    return cells;
}

std::map<std::pair<std::string, std::string>, double> load_tpv_csv(
    const std::string& path) {
    std::map<std::pair<std::string, std::string>, double> tpv;
    for (const auto& fields : read_csv(path, "model,strategy,tpv")) {
        if (fields.size() != 3)
            throw std::runtime_error(path + ": expected 3 fields, got " +
                                     std::to_string(fields.size()));
        const Strategy strategy = parse_strategy_field(fields[1], path);
        tpv[{fields[0], strategy_code(strategy)}] = std::stod(fields[2]);
    }
    return tpv;
}

void apply_tpv(std::vector<CellSummary>& cells,
               const std::map<std::pair<std::string, std::string>, double>& tpv) {
    for (CellSummary& cell : cells) {
        const auto it = tpv.find({cell.model, strategy_code(cell.strategy)});
        if (it != tpv.end()) cell.tpv = it->second;
    }
}

std::map<std::string, Tier> load_tier_map_csv(const std::string& path) {
    std::map<std::string, Tier> tiers;
    for (const auto& fields : read_csv(path, "model,tier")) {
        if (fields.size() < 2)
            throw std::runtime_error(path + ": expected at least 2 fields");
        Tier tier;
        if (fields[1] == "T1") {
            tier = Tier::T1;
        } else if (fields[1] == "T2") {
            tier = Tier::T2;
        } else if (fields[1] == "T3") {
            tier = Tier::T3;
        } else {
            throw std::runtime_error(path + ": unknown tier '" + fields[1] + "'");
        }
        tiers[fields[0]] = tier;
    }
    return tiers;
}

}  // namespace graphbench
