// Feature histograms, the MMD estimator (checked against a direct
// computation), and the per-dimension metrics: valid rate, uniqueness,
// structural fidelity, token F1 / textual similarity, and spectral proximity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "graphbench/metrics.hpp"
#include "graphbench/mmd.hpp"
#include "graphbench/pools.hpp"
#include "graphbench/properties.hpp"
#include "graphbench/rng.hpp"

using namespace graphbench;

namespace {

std::vector<PropertyReport> report_pool(int count, int n, double p, std::uint64_t seed) {
    RngStream rng(seed, "mmd-pool");
    std::vector<PropertyReport> out;
    for (int i = 0; i < count; ++i) out.push_back(compute_properties(gnp(n, p, rng)));
    return out;
}

// Direct biased MMD^2 with an explicit Gaussian kernel over histogram mass
// vectors: E[k(x,x')] + E[k(y,y')] - 2 E[k(x,y)], all pairs including self.
double direct_mmd(const std::vector<FeatureHistogram>& xs,
                  const std::vector<FeatureHistogram>& ys, double sigma) {
    auto kernel = [&](const FeatureHistogram& a, const FeatureHistogram& b) {
        const double d = histogram_distance(a, b);
        return std::exp(-d * d / (2.0 * sigma * sigma));
    };
    double kxx = 0.0, kyy = 0.0, kxy = 0.0;
    for (const auto& a : xs)
        for (const auto& b : xs) kxx += kernel(a, b);
    for (const auto& a : ys)
        for (const auto& b : ys) kyy += kernel(a, b);
    for (const auto& a : xs)
        for (const auto& b : ys) kxy += kernel(a, b);
    const double m = static_cast<double>(xs.size());
    const double n = static_cast<double>(ys.size());
    return kxx / (m * m) + kyy / (n * n) - 2.0 * kxy / (m * n);
}

ParseResult parsed_doc(const GraphDoc& doc) {
    return parse_document(serialize_document(doc));
}

std::vector<FeatureHistogram> histograms_of(const std::vector<PropertyReport>& reports,
                                            FeatureKind kind) {
    std::vector<FeatureHistogram> out;
    for (const auto& r : reports) out.push_back(feature_histogram(r, kind));
    return out;
}

}  // namespace

TEST_CASE("degree histogram puts mass on exact degrees") {
    RngStream rng(1, "h");
    const PropertyReport rep = compute_properties(star_graph(5, rng));
    const FeatureHistogram h = feature_histogram(rep, FeatureKind::degree);
    REQUIRE(h.mass.size() == kHistogramBins);
    // Star on 5 nodes: four degree-1 nodes, one degree-4 hub.
    CHECK(h.mass[1] == doctest::Approx(0.8));
    CHECK(h.mass[4] == doctest::Approx(0.2));
    double total = 0.0;
    for (double m : h.mass) total += m;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("degree histogram clamps above the top bin") {
    const PropertyReport rep = compute_properties(complete_graph(70));
    const FeatureHistogram h = feature_histogram(rep, FeatureKind::degree);
    CHECK(h.mass[63] == doctest::Approx(1.0));  // every degree is 69 -> bin 63
}

TEST_CASE("clustering and spectral histograms normalize over their ranges") {
    const PropertyReport rep = compute_properties(complete_graph(6));
    const FeatureHistogram hc = feature_histogram(rep, FeatureKind::clustering);
    // Every local clustering value is 1.0 -> the final bin.
    CHECK(hc.mass[63] == doctest::Approx(1.0));
    const FeatureHistogram hs = feature_histogram(rep, FeatureKind::spectral);
    double total = 0.0;
    for (double m : hs.mass) total += m;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("orbit4 histogram is a jointly normalized 4x16 profile") {
    RngStream rng(2, "h4");
    const PropertyReport rep = compute_properties(gnp(10, 0.4, rng));
    const FeatureHistogram h = feature_histogram(rep, FeatureKind::orbit4);
    REQUIRE(h.mass.size() == kHistogramBins);
    double total = 0.0;
    for (double m : h.mass) total += m;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("empty graphs give the all-zero mass vector") {
    const PropertyReport rep = compute_properties(Graph::from_edges(0, {}));
    for (FeatureKind kind : {FeatureKind::degree, FeatureKind::clustering,
                             FeatureKind::spectral, FeatureKind::orbit4}) {
        const FeatureHistogram h = feature_histogram(rep, kind);
        for (double m : h.mass) CHECK(m == 0.0);
    }
}

TEST_CASE("MMD of a sample against itself is (numerically) zero") {
    const auto pool = report_pool(25, 8, 0.3, 5);
    for (FeatureKind kind : {FeatureKind::degree, FeatureKind::clustering,
                             FeatureKind::spectral, FeatureKind::orbit4}) {
        const MmdResult r = mmd(pool, pool, kind);
        CHECK(r.value <= 1e-9);
        CHECK(r.value >= 0.0);
    }
}

TEST_CASE("MMD is symmetric in its arguments") {
    const auto a = report_pool(22, 8, 0.2, 7);
    const auto b = report_pool(24, 8, 0.6, 9);
    for (FeatureKind kind : {FeatureKind::degree, FeatureKind::spectral}) {
        const MmdResult ab = mmd(a, b, kind);
        const MmdResult ba = mmd(b, a, kind);
        CHECK(ab.value == doctest::Approx(ba.value).epsilon(1e-12));
    }
}

TEST_CASE("MMD matches the direct computation under a fixed bandwidth") {
    const auto a = report_pool(21, 8, 0.25, 11);
    const auto b = report_pool(23, 8, 0.55, 13);
    MmdConfig config;
    config.bandwidth = 0.4;
    const MmdResult got = mmd(a, b, FeatureKind::degree, config);
    const double expected = direct_mmd(histograms_of(a, FeatureKind::degree),
                                       histograms_of(b, FeatureKind::degree), 0.4);
    CHECK(got.bandwidth == doctest::Approx(0.4));
    CHECK(got.value == doctest::Approx(std::max(0.0, expected)).epsilon(1e-10));
}

TEST_CASE("distinguishable distributions yield clearly positive MMD") {
    const auto sparse = report_pool(30, 10, 0.15, 17);
    const auto dense = report_pool(30, 10, 0.75, 19);
    const MmdResult r = mmd(sparse, dense, FeatureKind::degree);
    CHECK(r.value > 0.01);
}

TEST_CASE("undersized pools are rejected") {
    const auto small = report_pool(10, 8, 0.3, 21);
    const auto sample = report_pool(21, 8, 0.3, 23);
    CHECK_THROWS_AS(mmd(sample, small, FeatureKind::degree), std::invalid_argument);
    CHECK_THROWS_AS(mmd({}, sample, FeatureKind::degree), std::invalid_argument);
    MmdConfig relaxed;
    relaxed.min_pool = 5;
    CHECK_NOTHROW(mmd(sample, small, FeatureKind::degree, relaxed));
}

TEST_CASE("median heuristic falls back to 1 on degenerate spreads") {
    const PropertyReport rep = compute_properties(complete_graph(5));
    const FeatureHistogram h = feature_histogram(rep, FeatureKind::degree);
    // All points identical -> median distance 0 -> bandwidth 1.
    CHECK(median_heuristic_bandwidth({h, h, h}, {h, h}) == doctest::Approx(1.0));
    CHECK(median_heuristic_bandwidth({h}, {}) == doctest::Approx(1.0));
}

TEST_CASE("valid rate counts parse + lint passes") {
    RngStream rng(3, "vr");
    const GraphDoc good = doc_from_graph(gnp(5, 0.5, rng), "g");
    std::vector<ParseResult> samples;
    samples.push_back(parsed_doc(good));
    samples.push_back(parsed_doc(good));
    samples.push_back(parse_response("not a graph"));
    // A header mismatch parses but fails lint.
    std::string lieing = serialize_document(good);
    const auto pos = lieing.find("nodes=5");
    REQUIRE(pos != std::string::npos);
    lieing.replace(pos, 7, "nodes=9");
    samples.push_back(parse_response(lieing));
    CHECK(valid_rate(samples) == doctest::Approx(0.5));
    CHECK(valid_rate({}) == 0.0);
}

TEST_CASE("uniqueness counts isomorphism classes over total samples") {
    RngStream rng(4, "uniq");
    const GraphDoc tri = doc_from_graph(
        Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}), "a");
    const GraphDoc path = doc_from_graph(Graph::from_edges(3, {{0, 1}, {1, 2}}), "b");
    // Same triangle under another labeling: one class with tri.
    const GraphDoc tri2 = doc_from_graph(
        Graph::from_edges(3, {{1, 0}, {2, 1}, {0, 2}}), "c");
    std::vector<ParseResult> samples{parsed_doc(tri), parsed_doc(path), parsed_doc(tri2)};
    CHECK(uniqueness(samples) == doctest::Approx(2.0 / 3.0));

    // k identical samples -> 1/k.
    for (int k = 1; k <= 5; ++k) {
        std::vector<ParseResult> same(k, parsed_doc(tri));
        CHECK(uniqueness(same) == doctest::Approx(1.0 / k));
    }

    // Unparseable samples dilute the ratio; all-unparseable scores zero.
    std::vector<ParseResult> mixed{parsed_doc(tri), parse_response("nope")};
    CHECK(uniqueness(mixed) == doctest::Approx(0.5));
    CHECK(uniqueness({parse_response("nope")}) == 0.0);
}

TEST_CASE("structural fidelity mixes per level family") {
    // Constraint-driven levels: 0.7*vr + 0.3*uniqueness.
    for (int level : {0, 1, 2, 5})
        CHECK(score_d1(level, 0.8, 0.5) == doctest::Approx(0.7 * 0.8 + 0.3 * 0.5));
    // Distribution-driven levels with an MMD value.
    for (int level : {3, 4})
        CHECK(score_d1(level, 0.8, 0.5, 0.2) ==
              doctest::Approx(0.3 * 0.8 + 0.5 * std::exp(-0.2) + 0.2 * 0.5));
    // Without one they fall back to the constraint-driven formula.
    for (int level : {3, 4})
        CHECK(score_d1(level, 0.8, 0.5) == doctest::Approx(0.7 * 0.8 + 0.3 * 0.5));
}

TEST_CASE("tokenizer keeps maximal alphanumeric runs") {
    CHECK(tokenize_text("Alice knows Bob-7, right?") ==
          std::vector<std::string>{"Alice", "knows", "Bob", "7", "right"});
    CHECK(tokenize_text("") == std::vector<std::string>{});
    CHECK(tokenize_text("...!!!") == std::vector<std::string>{});
}

TEST_CASE("token F1 follows the multiset convention") {
    CHECK(token_f1("a b c", "a b c") == doctest::Approx(1.0));
    CHECK(token_f1("", "") == doctest::Approx(1.0));
    CHECK(token_f1("a b", "") == doctest::Approx(0.0));
    // Multiset: "a a b" vs "a b b" share {a, b} -> precision 2/3, recall 2/3.
    CHECK(token_f1("a a b", "a b b") == doctest::Approx(2.0 / 3.0));
    // Order does not matter.
    CHECK(token_f1("b a", "a b") == doctest::Approx(1.0));
    // The tokenizer is case-preserving, so case differences are mismatches.
    CHECK(token_f1("Alice Bob", "alice bob") == doctest::Approx(0.0));
}

TEST_CASE("textual similarity scores presence and best-reference F1") {
    GraphDoc doc;
    doc.name = "sim";
    doc.declared_nodes = 2;
    doc.nodes = {"0", "1"};
    doc.edges = {{"0", "1"}};
    doc.node_attrs["0"]["label"] = std::string("Alice");
    doc.node_attrs["1"]["label"] = std::string("Bob");

    GraphDoc ref = doc;
    ref.name = "sim-ref1";
    const auto score = score_d2(doc, {ref});
    REQUIRE(score.has_value());
    CHECK(score->text_presence == doctest::Approx(1.0));
    CHECK(score->text_similarity == doctest::Approx(1.0));  // name-stripped identical
    CHECK(score->value == doctest::Approx(1.0));

    // No references: the dimension does not apply.
    CHECK(!score_d2(doc, {}).has_value());

    // A graph with no text against a reference with text.
    GraphDoc bare;
    bare.name = "bare";
    bare.declared_nodes = 2;
    bare.nodes = {"0", "1"};
    bare.edges = {{"0", "1"}};
    const auto bare_score = score_d2(bare, {ref});
    REQUIRE(bare_score.has_value());
    CHECK(bare_score->text_presence < 1.0);
    CHECK(bare_score->value ==
          doctest::Approx(0.5 * bare_score->text_presence +
                          0.5 * bare_score->text_similarity));
}

TEST_CASE("spectral proximity: coherence bounds and degenerate inputs") {
    RngStream rng(6, "d3");
    std::vector<GraphDoc> sample;
    for (int i = 0; i < 4; ++i)
        sample.push_back(doc_from_graph(gnp(8, 0.4, rng), "s" + std::to_string(i)));

    // Fewer than two parsed samples: coherence 1 by convention.
    const D3Score single = score_d3({sample[0]}, {});
    CHECK(single.grassmann_coherence == doctest::Approx(1.0));
    CHECK(single.value == doctest::Approx(1.0));

    // Identical samples: fully coherent subspaces.
    const D3Score same = score_d3({sample[0], sample[0], sample[0]}, {});
    CHECK(same.grassmann_coherence == doctest::Approx(1.0).epsilon(1e-6));

    // Mixed samples stay inside [0, 1]; small pools skip the embedding term.
    const D3Score mixed = score_d3(sample, {sample[0]});
    CHECK(mixed.grassmann_coherence >= 0.0);
    CHECK(mixed.grassmann_coherence <= 1.0);
    CHECK(!mixed.embedding_mmd.has_value());
    CHECK(mixed.value == doctest::Approx(mixed.grassmann_coherence));

    // A qualifying pool activates the 0.5/0.5 mix.
    std::vector<GraphDoc> pool;
    for (int i = 0; i < 25; ++i)
        pool.push_back(doc_from_graph(gnp(8, 0.4, rng), "p" + std::to_string(i)));
    const D3Score full = score_d3(sample, pool);
    REQUIRE(full.embedding_mmd.has_value());
    CHECK(full.value == doctest::Approx(0.5 * full.grassmann_coherence +
                                        0.5 * std::exp(-*full.embedding_mmd)));
}

TEST_CASE("spectral summaries are 16-point quantile resamples") {
    RngStream rng(8, "ss");
    const PropertyReport rep = compute_properties(gnp(10, 0.5, rng));
    const auto summary = spectral_summary_vector(rep);
    REQUIRE(summary.size() == 16);
    for (std::size_t i = 1; i < summary.size(); ++i)
        CHECK(summary[i] >= summary[i - 1] - 1e-12);  // sorted spectrum resample
    // Single-node graph: constant vector.
    const auto flat = spectral_summary_vector(compute_properties(Graph::from_edges(1, {})));
    for (double v : flat) CHECK(v == doctest::Approx(flat[0]));
}

TEST_CASE("vector MMD vanishes on identical point sets") {
    const std::vector<std::vector<double>> points{{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}};
    CHECK(vector_mmd(points, points) <= 1e-9);
    const std::vector<std::vector<double>> other{{5.0, 5.0}, {6.0, 6.0}, {7.0, 5.0}};
    CHECK(vector_mmd(points, other) > 0.01);
}

TEST_CASE("mmd_bar averages the three scoring features") {
    const auto sample = report_pool(21, 8, 0.3, 31);
    const auto pool = report_pool(25, 8, 0.5, 33);
    const double bar = mmd_bar(sample, pool);
    const double expected = (mmd(sample, pool, FeatureKind::degree).value +
                             mmd(sample, pool, FeatureKind::clustering).value +
                             mmd(sample, pool, FeatureKind::spectral).value) /
                            3.0;
    CHECK(bar == doctest::Approx(expected).epsilon(1e-12));
}
