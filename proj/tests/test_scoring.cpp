// Scoring tests: the efficiency dimension's pinned values and monotonicity,
// weight-table invariants, level aggregation, Pareto frontier membership and
// bonus, frontier distance, Cost@Q, strategy sigma, and tier banding.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "graphbench/scoring.hpp"

using namespace graphbench;

namespace {

CellSummary cell(const std::string& model, Strategy strategy, double s_total,
                 std::optional<double> tpv) {
    CellSummary c;
    c.model = model;
    c.strategy = strategy;
    c.s_total = s_total;
    c.tpv = tpv;
    for (auto& ls : c.level_scores) ls = s_total;
    return c;
}

}  // namespace

TEST_CASE("efficiency score: pinned values") {
    CHECK(score_d5(0.0, 1.0) == 1.0);  // exact: both exponents vanish
    CHECK(score_d5(1000.0, 1.0) == doctest::Approx(0.5575156088).epsilon(1e-9));
    CHECK(score_d5(0.0, 3.0) == doctest::Approx(0.810364).epsilon(1e-6));
    // The closed form at arbitrary points.
    const LevelWeights w;
    CHECK(score_d5(123.0, 2.5) ==
          doctest::Approx(0.7 * std::exp(-123.0 / w.d5_token_scale) +
                          0.3 * std::exp(-1.5 / w.d5_call_scale)));
}

TEST_CASE("efficiency score: domain errors and monotonicity") {
    CHECK_THROWS_AS(score_d5(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(score_d5(100.0, 0.5), std::invalid_argument);
    CHECK_NOTHROW(score_d5(0.0, 1.0));
    // Strictly decreasing in tokens and in calls.
    double prev = 2.0;
    for (double tpv : {0.0, 10.0, 100.0, 1000.0, 10000.0}) {
        const double v = score_d5(tpv, 1.0);
        CHECK(v < prev);
        prev = v;
    }
    prev = 2.0;
    for (double calls : {1.0, 1.5, 2.0, 4.0, 8.0}) {
        const double v = score_d5(500.0, calls);
        CHECK(v < prev);
        prev = v;
    }
    // Custom scales change the decay rate.
    LevelWeights slow;
    slow.d5_token_scale = 2000.0;
    CHECK(score_d5(1000.0, 1.0, slow) > score_d5(1000.0, 1.0));
}

TEST_CASE("weight tables: level weights and every dimension row sum to 1") {
    const LevelWeights w;
    double level_sum = 0.0;
    for (double lw : w.level_weights) level_sum += lw;
    CHECK(level_sum == doctest::Approx(1.0).epsilon(1e-12));
    for (int level = 0; level < kNumLevels; ++level) {
        double row = 0.0;
        for (double dw : w.dim_weights[level]) row += dw;
        CAPTURE(level);
        CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("quality-only rows drop the efficiency column and renormalize") {
    LevelWeights w;
    w.quality_only = true;
    for (int level = 0; level < kNumLevels; ++level) {
        const auto row = w.effective_dim_row(level);
        CHECK(row[4] == 0.0);
        double sum = 0.0;
        for (double v : row) sum += v;
        CAPTURE(level);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        // Ratios among the surviving dimensions are preserved.
        const auto& base = w.dim_weights[level];
        const double mass = 1.0 - base[4];
        for (int d = 0; d < 4; ++d)
            CHECK(row[d] == doctest::Approx(base[d] / mass).epsilon(1e-12));
    }
}

TEST_CASE("level aggregation demands present dimensions and mixes linearly") {
    LevelWeights w;
    DimScores dims;
    dims.d1 = 0.9;
    dims.d4 = 0.8;
    dims.d5 = 0.7;
    // Level 0 weights: d1 0.10, d4 0.60, d5 0.30 (d2 = d3 = 0 may stay absent).
    CHECK(aggregate_level(0, dims, w) ==
          doctest::Approx(0.10 * 0.9 + 0.60 * 0.8 + 0.30 * 0.7));
    // Level 4 also needs d2 and d3.
    CHECK_THROWS_WITH_AS(aggregate_level(4, dims, w),
                         doctest::Contains("d2"), std::invalid_argument);
    dims.d2 = 0.6;
    dims.d3 = 0.5;
    CHECK(aggregate_level(4, dims, w) ==
          doctest::Approx(0.10 * 0.9 + 0.15 * 0.6 + 0.05 * 0.5 + 0.55 * 0.8 +
                          0.15 * 0.7));
}

TEST_CASE("total quality is the level-weighted sum") {
    const std::array<double, kNumLevels> scores{1.0, 0.9, 0.8, 0.7, 0.6, 0.5};
    const LevelWeights w;
    double expected = 0.0;
    for (int l = 0; l < kNumLevels; ++l) expected += w.level_weights[l] * scores[l];
    CHECK(aggregate_quality(scores) == doctest::Approx(expected));
}

TEST_CASE("pareto frontier keeps exactly the non-dominated cells") {
    std::vector<CellSummary> cells;
    cells.push_back(cell("cheap-weak", Strategy::zero_shot, 0.70, 100.0));   // member
    cells.push_back(cell("mid", Strategy::zero_shot, 0.80, 300.0));          // member
    cells.push_back(cell("dominated", Strategy::zero_shot, 0.75, 400.0));    // no
    cells.push_back(cell("best", Strategy::zero_shot, 0.90, 900.0));         // member
    cells.push_back(cell("costly-weak", Strategy::zero_shot, 0.60, 2000.0)); // no
    cells.push_back(cell("no-tpv", Strategy::zero_shot, 0.99, std::nullopt)); // never
    const auto frontier = pareto_frontier(cells);
    std::set<std::size_t> got(frontier.begin(), frontier.end());
    CHECK(got == std::set<std::size_t>{0, 1, 3});
}

TEST_CASE("duplicate points are both kept (neither strictly dominates)") {
    std::vector<CellSummary> cells;
    cells.push_back(cell("a", Strategy::zero_shot, 0.8, 500.0));
    cells.push_back(cell("b", Strategy::zero_shot, 0.8, 500.0));
    const auto frontier = pareto_frontier(cells);
    CHECK(frontier.size() == 2);
}

TEST_CASE("final score applies the frontier bonus multiplicatively") {
    CHECK(s_final(0.8, false) == doctest::Approx(0.8));
    CHECK(s_final(0.8, true) == doctest::Approx(0.8 * 1.15));
    CHECK(s_final(0.8, true, 0.10) == doctest::Approx(0.8 * 1.10));
}

TEST_CASE("annotate_cells fills bonus, final score, efficiency rate, and distance") {
    std::vector<CellSummary> cells;
    cells.push_back(cell("a", Strategy::zero_shot, 0.70, 100.0));
    cells.push_back(cell("b", Strategy::zero_shot, 0.90, 900.0));
    cells.push_back(cell("c", Strategy::zero_shot, 0.65, 400.0));  // dominated by a
    cells.push_back(cell("d", Strategy::zero_shot, 0.95, std::nullopt));
    annotate_cells(cells);

    CHECK(cells[0].pareto_bonus == 1);
    CHECK(cells[1].pareto_bonus == 1);
    CHECK(cells[2].pareto_bonus == 0);
    CHECK(cells[3].pareto_bonus == 0);
    CHECK(cells[0].s_final == doctest::Approx(0.70 * 1.15));
    CHECK(cells[2].s_final == doctest::Approx(0.65));
    REQUIRE(cells[0].q_per_ktpv.has_value());
    CHECK(*cells[0].q_per_ktpv == doctest::Approx(0.70 / 0.1));  // per 1k tokens
    CHECK(!cells[3].q_per_ktpv.has_value());

    // Frontier members sit at distance zero; the dominated cell is below the
    // interpolated frontier at its log-cost position.
    CHECK(*cells[0].frontier_distance == doctest::Approx(0.0));
    CHECK(*cells[1].frontier_distance == doctest::Approx(0.0));
    REQUIRE(cells[2].frontier_distance.has_value());
    const double t = (std::log(400.0) - std::log(100.0)) /
                     (std::log(900.0) - std::log(100.0));
    const double qstar = 0.70 + t * (0.90 - 0.70);
    CHECK(*cells[2].frontier_distance == doctest::Approx(qstar - 0.65).epsilon(1e-9));
    CHECK(!cells[3].frontier_distance.has_value());
}

TEST_CASE("frontier distance is flat beyond the endpoints") {
    std::vector<CellSummary> frontier;
    frontier.push_back(cell("lo", Strategy::zero_shot, 0.6, 100.0));
    frontier.push_back(cell("hi", Strategy::zero_shot, 0.9, 1000.0));
    // Below the cheapest frontier point: compare against its quality.
    CHECK(frontier_distance(cell("x", Strategy::zero_shot, 0.5, 50.0), frontier) ==
          doctest::Approx(0.1));
    // Beyond the most expensive point: compare against its quality.
    CHECK(frontier_distance(cell("y", Strategy::zero_shot, 0.7, 5000.0), frontier) ==
          doctest::Approx(0.2));
    // Above the frontier clamps to zero.
    CHECK(frontier_distance(cell("z", Strategy::zero_shot, 0.95, 500.0), frontier) ==
          doctest::Approx(0.0));
}

TEST_CASE("Cost@Q returns the cheapest qualifying cell or never") {
    std::vector<CellSummary> cells;
    cells.push_back(cell("m", Strategy::zero_shot, 0.78, 300.0));
    cells.push_back(cell("m", Strategy::few_shot, 0.85, 900.0));
    cells.push_back(cell("m", Strategy::zero_cot, 0.83, 500.0));
    cells.push_back(cell("m", Strategy::few_cot, 0.90, std::nullopt));
    const auto cost = cost_at_threshold(cells, 0.8);
    REQUIRE(cost.has_value());
    CHECK(*cost == doctest::Approx(500.0));
    CHECK(!cost_at_threshold(cells, 0.95).has_value());  // no-tpv cell cannot qualify
    CHECK(*cost_at_threshold(cells, 0.5) == doctest::Approx(300.0));
}

TEST_CASE("strategy sigma is the population deviation over exactly four values") {
    // Hand case: {1, 2, 3, 4} -> variance 1.25.
    CHECK(sigma_strat({1.0, 2.0, 3.0, 4.0}) == doctest::Approx(std::sqrt(1.25)));
    CHECK(sigma_strat({0.8, 0.8, 0.8, 0.8}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(sigma_strat({1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(sigma_strat({1.0, 2.0, 3.0, 4.0, 5.0}), std::invalid_argument);
}

TEST_CASE("tier banding with the indeterminate gap") {
    CHECK(tier_from_thresholds(0.90) == Tier::T1);
    CHECK(tier_from_thresholds(0.871) == Tier::T1);
    CHECK(tier_from_thresholds(0.87) == Tier::T2);
    CHECK(tier_from_thresholds(0.82) == Tier::T2);
    CHECK(tier_from_thresholds(0.79) == Tier::T3);
    CHECK(!tier_from_thresholds(0.81).has_value());
    CHECK(!tier_from_thresholds(0.80).has_value());
}

TEST_CASE("strategy names parse in both spellings") {
    CHECK(strategy_from_string("ZS") == Strategy::zero_shot);
    CHECK(strategy_from_string("zero_shot") == Strategy::zero_shot);
    CHECK(strategy_from_string("FS") == Strategy::few_shot);
    CHECK(strategy_from_string("ZC") == Strategy::zero_cot);
    CHECK(strategy_from_string("FC") == Strategy::few_cot);
    CHECK(!strategy_from_string("mystery").has_value());
    for (Strategy s : {Strategy::zero_shot, Strategy::few_shot, Strategy::zero_cot,
                       Strategy::few_cot}) {
        CHECK(strategy_from_string(to_string(s)) == s);
        CHECK(strategy_from_string(strategy_code(s)) == s);
    }
}
