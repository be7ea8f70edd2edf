// Report emission: every analysis table as a deterministic file on disk.
#include "graphbench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace graphbench {

namespace {

std::string fmt(double value, int precision = 6) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
    return buffer;
}

std::string fmt_opt(const std::optional<double>& value, int precision = 6) {
    return value ? fmt(*value, precision) : std::string();
}

class TableWriter {
public:
    TableWriter(const std::filesystem::path& dir, const std::string& name,
                std::vector<std::string>& written)
        : path_(dir / name) {
        out_.open(path_);
        if (!out_) throw std::runtime_error("cannot write " + path_.string());
        written.push_back(path_.string());
    }

    void line(const std::string& text) { out_ << text << '\n'; }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            out_ << (i ? "," : "") << fields[i];
        out_ << '\n';
    }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

const std::string kCellHeader =
    "rank,model,strategy,s_total,l0,l1,l2,l3,l4,l5,s_final,tpv,q_per_ktpv";

void write_leaderboard(TableWriter& table, const Leaderboard& board) {
    table.line(kCellHeader);
    int rank = 0;
    for (const CellSummary& cell : board.rows) {
        std::vector<std::string> fields{std::to_string(++rank), cell.model,
                                        strategy_code(cell.strategy),
                                        fmt(cell.s_total)};
        for (int level = 0; level < kNumLevels; ++level)
            fields.push_back(fmt(cell.level_scores[level]));
        fields.push_back(fmt(cell.s_final));
        fields.push_back(fmt_opt(cell.tpv, 3));
        fields.push_back(fmt_opt(cell.q_per_ktpv));
        table.row(fields);
    }
}

}  // namespace

std::vector<std::string> emit_report(const ReportInputs& inputs,
                                     const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir + ": " + ec.message());

    std::vector<CellSummary> cells = inputs.cells;
    annotate_cells(cells);
    std::vector<std::string> written;

    // Leaderboards under each ordering key.
    for (const LeaderboardKey key :
         {LeaderboardKey::s_total, LeaderboardKey::s_final, LeaderboardKey::q_per_ktpv}) {
        TableWriter table(dir, "leaderboard_" + to_string(key) + ".csv", written);
        write_leaderboard(table, leaderboard(cells, key));
    }

    // Tier gaps under both uniform aggregation modes.
    {
        TableWriter table(dir, "tier_gaps.csv", written);
        table.line("mode,level,t1_mean,t2_mean,t3_mean,gap");
        for (const TierGapMode mode :
             {TierGapMode::best_of_four, TierGapMode::all_strategy_avg}) {
            if (cells.empty() || inputs.tier_map.empty()) continue;
            try {
                const TierGapReport report = tier_gaps(cells, inputs.tier_map, mode);
                for (int level = 0; level < kNumLevels; ++level)
                    table.row({to_string(mode), std::to_string(level),
                               fmt(report.t1_mean[level]), fmt(report.t2_mean[level]),
                               fmt(report.t3_mean[level]), fmt(report.gap[level])});
            } catch (const std::invalid_argument& error) {
                table.line(std::string("# tier gaps unavailable: ") + error.what());
            }
        }
    }

    // Strategy deltas with sign tallies.
    {
        TableWriter table(dir, "strategy_deltas.csv", written);
        table.line("variant,level,mean_delta,positive,negative,ties");
        const StrategyDeltaReport report = strategy_deltas(cells);
        for (const std::string& warning : report.warnings)
            table.line("# " + warning);
        if (!report.models.empty()) {
            for (std::size_t v = 0; v < kDeltaVariants.size(); ++v)
                for (int level = 0; level < kNumLevels; ++level)
                    table.row({strategy_code(kDeltaVariants[v]), std::to_string(level),
                               fmt(report.mean_delta[v][level]),
                               std::to_string(report.signs[v][level].positive),
                               std::to_string(report.signs[v][level].negative),
                               std::to_string(report.signs[v][level].ties)});
        }
    }

    // Frontier membership and distance-to-frontier.
    std::vector<const CellSummary*> frontier_rows;
    std::vector<const CellSummary*> off_frontier;
    for (const CellSummary& cell : cells) {
        if (!cell.tpv) continue;
        (cell.pareto_bonus ? frontier_rows : off_frontier).push_back(&cell);
    }
    {
        std::sort(frontier_rows.begin(), frontier_rows.end(),
                  [](const CellSummary* a, const CellSummary* b) {
                      return *a->tpv < *b->tpv;
                  });
        TableWriter table(dir, "pareto_frontier.csv", written);
        table.line("model,strategy,tpv,s_total,s_final");
        for (const CellSummary* cell : frontier_rows)
            table.row({cell->model, strategy_code(cell->strategy), fmt(*cell->tpv, 3),
                       fmt(cell->s_total), fmt(cell->s_final)});
    }
    {
        std::sort(off_frontier.begin(), off_frontier.end(),
                  [](const CellSummary* a, const CellSummary* b) {
                      const double fa = a->frontier_distance.value_or(0.0);
                      const double fb = b->frontier_distance.value_or(0.0);
                      if (fa != fb) return fa > fb;
                      if (a->model != b->model) return a->model < b->model;
                      return strategy_code(a->strategy) < strategy_code(b->strategy);
                  });
        TableWriter table(dir, "frontier_distance.csv", written);
        table.line("model,strategy,tpv,s_total,frontier_distance");
        for (const CellSummary* cell : off_frontier)
            table.row({cell->model, strategy_code(cell->strategy), fmt(*cell->tpv, 3),
                       fmt(cell->s_total), fmt_opt(cell->frontier_distance)});
    }

    // Cheapest strategy beating the quality threshold, per model.
    {
        TableWriter table(dir, "cost_at_threshold.csv", written);
        table.line("model,threshold,min_tpv");
        std::map<std::string, std::vector<CellSummary>> by_model;
        for (const CellSummary& cell : cells) by_model[cell.model].push_back(cell);
        for (const auto& [model, model_cells] : by_model) {
            const std::optional<double> cost =
                cost_at_threshold(model_cells, inputs.cost_threshold);
            table.row({model, fmt(inputs.cost_threshold, 2),
                       cost ? fmt(*cost, 3) : std::string("never")});
        }
    }

    // Strategy-sensitivity points plus the regression-with-robustness record.
    const std::vector<ModelSpread> spreads = model_spreads(cells);
    {
        TableWriter table(dir, "sigma_strat.csv", written);
        table.line("model,mean_quality,sigma_strat");
        for (const ModelSpread& spread : spreads)
            table.row({spread.model, fmt(spread.mean_quality), fmt(spread.sigma)});
    }
    {
        const std::filesystem::path path = dir / "ols_robustness.json";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        written.push_back(path.string());
        nlohmann::ordered_json node;
        node["points"] = spreads.size();
        if (spreads.size() >= 3) {
            std::vector<double> x, y;
            for (const ModelSpread& spread : spreads) {
                x.push_back(spread.mean_quality);
                y.push_back(spread.sigma);
            }
            const RegressionResult reg = ols_with_robustness(x, y);
            node["slope"] = reg.fit.slope;
            node["intercept"] = reg.fit.intercept;
            node["r_squared"] = reg.fit.r_squared;
            node["p_value"] = reg.fit.p_value;
            node["bootstrap"] = {{"ci_lo", reg.bootstrap.ci_lo},
                                 {"ci_hi", reg.bootstrap.ci_hi},
                                 {"median", reg.bootstrap.median},
                                 {"prob_negative", reg.bootstrap.prob_negative}};
            node["loo"] = {{"lo", reg.loo.lo}, {"hi", reg.loo.hi}};
        } else {
            node["note"] = "need >= 3 fully-evaluated models";
        }
        out << node.dump(2) << '\n';
    }

    // Per-level oracle composition for every fully-evaluated model.
    {
        TableWriter table(dir, "oracle.csv", written);
        table.line("model,oracle_q,pick_l0,pick_l1,pick_l2,pick_l3,pick_l4,pick_l5");
        std::map<std::string, std::vector<CellSummary>> by_model;
        for (const CellSummary& cell : cells) by_model[cell.model].push_back(cell);
        for (const auto& [model, model_cells] : by_model) {
            if (model_cells.size() != 4) continue;
            try {
                const OracleResult oracle = oracle_per_level(model_cells);
                std::vector<std::string> fields{model, fmt(oracle.q)};
                for (int level = 0; level < kNumLevels; ++level)
                    fields.push_back(strategy_code(oracle.chosen[level]));
                table.row(fields);
            } catch (const std::invalid_argument&) {
                // duplicate-strategy rows: not a four-strategy model
            }
        }
    }

    // Ablations (need per-dimension summaries).
    {
        TableWriter table(dir, "weight_ablation.csv", written);
        table.line("scheme,top9_retained,top15_retained,top15_jaccard,max_rank_shift,"
                   "rank_spearman");
        if (!inputs.quality_cells.empty()) {
            const WeightPerturbationReport report =
                weight_perturbation(inputs.quality_cells, WeightScheme::standard_set());
            for (const SchemeComparison& c : report.schemes)
                table.row({c.scheme, std::to_string(c.top9_retained),
                           std::to_string(c.top15_retained), fmt(c.top15_jaccard, 3),
                           std::to_string(c.max_rank_shift), fmt(c.rank_spearman, 3)});
        }
    }
    {
        TableWriter table(dir, "d5_scale_grid.csv", written);
        table.line("token_scale,call_scale,spearman,kendall,top1_same,top5_jaccard");
        if (!inputs.quality_cells.empty()) {
            for (const D5GridCell& cell : d5_scale_grid(inputs.quality_cells))
                table.row({fmt(cell.token_scale, 0), fmt(cell.call_scale, 0),
                           fmt(cell.spearman, 3), fmt(cell.kendall, 3),
                           cell.top1_same ? "yes" : "no", fmt(cell.top5_jaccard, 3)});
        }
    }

    // Plot-ready quality-vs-cost points.
    {
        TableWriter table(dir, "plot_quality_vs_tpv.csv", written);
        table.line("model,strategy,tpv,s_total,s_final,on_frontier");
        std::vector<const CellSummary*> points;
        for (const CellSummary& cell : cells)
            if (cell.tpv) points.push_back(&cell);
        std::sort(points.begin(), points.end(),
                  [](const CellSummary* a, const CellSummary* b) {
                      if (a->model != b->model) return a->model < b->model;
                      return strategy_code(a->strategy) < strategy_code(b->strategy);
                  });
        for (const CellSummary* cell : points)
            table.row({cell->model, strategy_code(cell->strategy), fmt(*cell->tpv, 3),
                       fmt(cell->s_total), fmt(cell->s_final),
                       cell->pareto_bonus ? "1" : "0"});
    }

    return written;
}

}  // namespace graphbench
