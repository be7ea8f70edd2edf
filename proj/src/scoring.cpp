#include "graphbench/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphbench {

namespace {

const char* kDimNames[5] = {"d1", "d2", "d3", "d4", "d5"};

std::optional<double> dim_value(const DimScores& dims, int index) {
    switch (index) {
        case 0: return dims.d1;
        case 1: return dims.d2;
        case 2: return dims.d3;
        case 3: return dims.d4;
        case 4: return dims.d5;
    }
    return std::nullopt;
}

void require_level(int level) {
    if (level < 0 || level >= kNumLevels)
        throw std::out_of_range("level " + std::to_string(level) + " out of range");
}

}  // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::zero_shot: return "zero_shot";
        case Strategy::few_shot: return "few_shot";
        case Strategy::zero_cot: return "zero_cot";
        case Strategy::few_cot: return "few_cot";
    }
    return "zero_shot";
}

std::string strategy_code(Strategy s) {
    switch (s) {
        case Strategy::zero_shot: return "ZS";
        case Strategy::few_shot: return "FS";
        case Strategy::zero_cot: return "ZC";
        case Strategy::few_cot: return "FC";
    }
    return "ZS";
}

std::optional<Strategy> strategy_from_string(const std::string& text) {
    for (Strategy s : {Strategy::zero_shot, Strategy::few_shot, Strategy::zero_cot,
                       Strategy::few_cot})
        if (text == to_string(s) || text == strategy_code(s)) return s;
    return std::nullopt;
}

std::array<double, 5> LevelWeights::effective_dim_row(int level) const {
    require_level(level);
    std::array<double, 5> row = dim_weights[level];
    if (!quality_only) return row;
    row[4] = 0.0;
    double sum = row[0] + row[1] + row[2] + row[3];
    if (sum > 0.0)
        for (double& w : row) w /= sum;
    return row;
}

double score_d5(double tpv, double api_calls, const LevelWeights& weights) {
    if (api_calls < 1.0)
        throw std::invalid_argument("api_calls must be >= 1: the scored output exists, "
                                    "so at least one call was made");
    if (tpv < 0.0) throw std::invalid_argument("tpv must be non-negative");
    return 0.7 * std::exp(-tpv / weights.d5_token_scale) +
           0.3 * std::exp(-(api_calls - 1.0) / weights.d5_call_scale);
}

double aggregate_level(int level, const DimScores& dims, const LevelWeights& weights) {
    std::array<double, 5> row = weights.effective_dim_row(level);
    double total = 0.0;
    for (int d = 0; d < 5; ++d) {
        if (row[d] <= 0.0) continue;
        std::optional<double> v = dim_value(dims, d);
        if (!v)
            throw std::invalid_argument("level " + std::to_string(level) +
                                        " requires dimension " + kDimNames[d] +
                                        " but it is absent");
        total += row[d] * *v;
    }
    return total;
}

double aggregate_quality(const std::array<double, kNumLevels>& level_scores,
                         const LevelWeights& weights) {
    double total = 0.0;
    for (int l = 0; l < kNumLevels; ++l) total += weights.level_weights[l] * level_scores[l];
    return total;
}

std::vector<std::size_t> pareto_frontier(const std::vector<CellSummary>& cells) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i].tpv) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < cells.size() && !dominated; ++j) {
            if (j == i || !cells[j].tpv) continue;
            bool no_worse =
                *cells[j].tpv <= *cells[i].tpv && cells[j].s_total >= cells[i].s_total;
            bool strict =
                *cells[j].tpv < *cells[i].tpv || cells[j].s_total > cells[i].s_total;
            dominated = no_worse && strict;
        }
        if (!dominated) out.push_back(i);
    }
    return out;
}

double s_final(double s_total, bool on_frontier, double lambda) {
    return s_total * (1.0 + lambda * (on_frontier ? 1.0 : 0.0));
}

double frontier_distance(const CellSummary& cell,
                         const std::vector<CellSummary>& frontier) {
    if (frontier.empty()) throw std::invalid_argument("frontier must be non-empty");
    if (!cell.tpv) throw std::invalid_argument("cell has no TPV");

    // (log TPV, S_total) knots, deduplicated by x keeping the best quality.
    std::vector<std::pair<double, double>> knots;
    for (const auto& f : frontier) {
        if (!f.tpv) continue;
        knots.push_back({std::log(*f.tpv), f.s_total});
    }
    std::sort(knots.begin(), knots.end());
    std::vector<std::pair<double, double>> dedup;
    for (const auto& k : knots) {
        if (!dedup.empty() && std::abs(dedup.back().first - k.first) < 1e-12)
            dedup.back().second = std::max(dedup.back().second, k.second);
        else
            dedup.push_back(k);
    }

    double x = std::log(*cell.tpv);
    double q_star;
    if (x <= dedup.front().first) {
        q_star = dedup.front().second;  // flat extension below the span
    } else if (x >= dedup.back().first) {
        q_star = dedup.back().second;  // flat extension above the span
    } else {
        q_star = dedup.back().second;
        for (std::size_t i = 0; i + 1 < dedup.size(); ++i) {
            if (x >= dedup[i].first && x <= dedup[i + 1].first) {
                double t = (x - dedup[i].first) / (dedup[i + 1].first - dedup[i].first);
                q_star = dedup[i].second + t * (dedup[i + 1].second - dedup[i].second);
                break;
            }
        }
    }
    return std::max(0.0, q_star - cell.s_total);
}

void annotate_cells(std::vector<CellSummary>& cells, double lambda) {
    std::vector<std::size_t> frontier_idx = pareto_frontier(cells);
    std::vector<CellSummary> frontier;
    for (std::size_t i : frontier_idx) frontier.push_back(cells[i]);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool on = std::find(frontier_idx.begin(), frontier_idx.end(), i) !=
                  frontier_idx.end();
        cells[i].pareto_bonus = on ? 1 : 0;
        cells[i].s_final = s_final(cells[i].s_total, on, lambda);
        if (cells[i].tpv) {
            cells[i].q_per_ktpv = cells[i].s_total / (*cells[i].tpv / 1000.0);
            if (!frontier.empty())
                cells[i].frontier_distance = frontier_distance(cells[i], frontier);
        }
    }
}

std::optional<double> cost_at_threshold(const std::vector<CellSummary>& model_cells,
                                        double q_threshold) {
    std::optional<double> best;
    for (const auto& c : model_cells) {
        if (!c.tpv || c.s_total < q_threshold) continue;
        if (!best || *c.tpv < *best) best = *c.tpv;
    }
    return best;
}

double sigma_strat(const std::vector<double>& quality_values) {
    if (quality_values.size() != 4)
        throw std::invalid_argument(
            "sigma_strat needs exactly four strategy cells, got " +
            std::to_string(quality_values.size()));
    double mean = 0.0;
    for (double v : quality_values) mean += v;
    mean /= 4.0;
    double var = 0.0;
    for (double v : quality_values) var += (v - mean) * (v - mean);
    var /= 4.0;
    return std::sqrt(var);
}

std::string to_string(Tier t) {
    switch (t) {
        case Tier::T1: return "T1";
        case Tier::T2: return "T2";
        case Tier::T3: return "T3";
    }
    return "T3";
}

std::optional<Tier> tier_from_thresholds(double mean_quality) {
    if (mean_quality > 0.87) return Tier::T1;
    if (mean_quality >= 0.82) return Tier::T2;
    if (mean_quality < 0.80) return Tier::T3;
    return std::nullopt;  // the published assignment decides boundary cases
}

}  // namespace graphbench
