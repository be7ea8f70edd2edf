// Structural-property tests. The reference implementations here are written
// independently (adjacency-matrix Floyd-Warshall, direct triangle counting,
// 2-coloring, definitional modularity) and compared against the library over
// exhaustive small-graph enumeration and random samples.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "graphbench/pools.hpp"
#include "graphbench/properties.hpp"
#include "graphbench/rng.hpp"

using namespace graphbench;

namespace {

constexpr double kInf = 1e18;

// Dense symmetric adjacency from an undirected Graph.
std::vector<std::vector<int>> dense_adj(const Graph& g) {
    const int n = g.num_nodes();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

std::vector<std::vector<double>> floyd_warshall(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j]) d[i][j] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

std::vector<int> ref_components(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        std::vector<int> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (a[v][u] && label[u] == -1) {
                    label[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return label;
}

bool ref_connected(const std::vector<std::vector<int>>& a) {
    const auto label = ref_components(a);
    for (int l : label)
        if (l != 0) return false;
    return true;
}

double ref_mean_local_clustering(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
            if (a[v][u]) nb.push_back(u);
        const int k = static_cast<int>(nb.size());
        if (k < 2) continue;
        int links = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (a[nb[i]][nb[j]]) ++links;
        sum += 2.0 * links / (static_cast<double>(k) * (k - 1));
    }
    return sum / n;
}

// APL and diameter over the largest component (most nodes; ties by smallest
// label, which cannot change the metric values).
void ref_path_metrics(const std::vector<std::vector<int>>& a, double* apl, int* diam) {
    const auto label = ref_components(a);
    const int n = static_cast<int>(a.size());
    int best = 0, best_size = 0;
    for (int c = 0;; ++c) {
        int size = 0;
        for (int l : label)
            if (l == c) ++size;
        if (size == 0) break;
        if (size > best_size) best = c, best_size = size;
    }
    const auto d = floyd_warshall(a);
    double sum = 0.0;
    int pairs = 0, dd = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (label[i] != best || label[j] != best) continue;
            sum += d[i][j];
            ++pairs;
            dd = std::max(dd, static_cast<int>(d[i][j]));
        }
    *apl = pairs ? sum / pairs : 0.0;
    *diam = dd;
}

bool ref_bipartite(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!a[v][u]) continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool ref_forest(const std::vector<std::vector<int>>& a, int m) {
    // A simple undirected graph is acyclic iff every component has
    // size-1 edges; globally: m == n - #components.
    const auto label = ref_components(a);
    int comps = 0;
    for (std::size_t i = 0; i < label.size(); ++i)
        comps = std::max(comps, label[i] + 1);
    return m == static_cast<int>(label.size()) - comps;
}

double ref_modularity(const std::vector<std::vector<int>>& a,
                      const std::vector<int>& part) {
    const int n = static_cast<int>(a.size());
    int m2 = 0;  // 2m
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j]) ++deg[i], ++m2;
    if (m2 == 0) return 0.0;
    double q = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (part[i] == part[j])
                q += a[i][j] - static_cast<double>(deg[i]) * deg[j] / m2;
    return q / m2;
}

Graph graph_from_mask(int n, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1u << bit)) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("exhaustive n<=5: library properties match the reference implementations") {
    for (int n = 1; n <= 5; ++n) {
        const int bits = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << bits); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const auto a = dense_adj(g);
            const PropertyReport rep = compute_properties(g);

            CHECK(rep.num_nodes == n);
            CHECK(rep.num_edges == g.num_edges());
            CHECK(rep.connected == ref_connected(a));
            CHECK(rep.acyclic == ref_forest(a, g.num_edges()));
            CHECK(rep.bipartite == ref_bipartite(a));
            CHECK(rep.mean_local_clustering ==
                  doctest::Approx(ref_mean_local_clustering(a)).epsilon(1e-12));
            double apl = 0.0;
            int diam = 0;
            ref_path_metrics(a, &apl, &diam);
            CHECK(rep.average_path_length == doctest::Approx(apl).epsilon(1e-12));
            CHECK(rep.diameter == diam);
            const double density =
                n < 2 ? 0.0 : 2.0 * g.num_edges() / (static_cast<double>(n) * (n - 1));
            CHECK(rep.density == doctest::Approx(density).epsilon(1e-12));

            // Shape predicates from first principles.
            const bool connected = ref_connected(a);
            std::vector<int> deg(n, 0);
            for (const auto& [u, v] : g.edges()) ++deg[u], ++deg[v];
            const int dmin = *std::min_element(deg.begin(), deg.end());
            const int dmax = *std::max_element(deg.begin(), deg.end());
            CHECK(rep.min_degree == dmin);
            CHECK(rep.max_degree == dmax);
            const bool tree = connected && g.num_edges() == n - 1;
            CHECK(rep.is_tree == tree);
            const bool cycle = connected && n >= 3 && dmin == 2 && dmax == 2;
            CHECK(rep.is_cycle == cycle);
            const bool path =
                tree && dmax <= 2;  // a path is a tree with max degree <= 2
            CHECK(rep.is_path == path);
            const bool star = n == 1 || (tree && dmax == n - 1);  // K_1 counts
            CHECK(rep.is_star == star);
            CHECK(rep.is_complete == (g.num_edges() == n * (n - 1) / 2));
            CHECK(rep.is_regular == (dmin == dmax));
        }
    }
}

TEST_CASE("random n in [6,12]: spot-check against the reference implementations") {
    RngStream rng(3, "props-random");
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + static_cast<int>(rng.uniform(7));
        const Graph g = gnp(n, 0.15 + 0.5 * rng.uniform_real(), rng);
        const auto a = dense_adj(g);
        const PropertyReport rep = compute_properties(g);
        CHECK(rep.connected == ref_connected(a));
        CHECK(rep.acyclic == ref_forest(a, g.num_edges()));
        CHECK(rep.bipartite == ref_bipartite(a));
        CHECK(rep.mean_local_clustering ==
              doctest::Approx(ref_mean_local_clustering(a)).epsilon(1e-9));
        double apl = 0.0;
        int diam = 0;
        ref_path_metrics(a, &apl, &diam);
        CHECK(rep.average_path_length == doctest::Approx(apl).epsilon(1e-9));
        CHECK(rep.diameter == diam);
    }
}

TEST_CASE("directed documents use the undirected view for path metrics") {
    GraphDoc doc;
    doc.name = "d";
    doc.declared_nodes = 3;
    doc.directed = true;
    doc.nodes = {"0", "1", "2"};
    doc.edges = {{"0", "1"}, {"1", "2"}};
    const PropertyReport rep = compute_properties(doc);
    CHECK(rep.directed);
    CHECK(rep.connected);  // weakly connected
    CHECK(rep.diameter == 2);
    CHECK(rep.average_path_length == doctest::Approx((1.0 + 1.0 + 2.0) / 3.0));
}

TEST_CASE("directed acyclicity is DAG reachability, not the undirected rule") {
    const Graph dag = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}, /*directed=*/true);
    CHECK(is_acyclic(dag));
    const Graph loop = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, true);
    CHECK(!is_acyclic(loop));
    // The same edge set undirected contains a cycle.
    const Graph und = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(!is_acyclic(und));
}

TEST_CASE("bipartite side sizes") {
    int small = 0, large = 0;
    const Graph g = Graph::from_edges(5, {{0, 3}, {1, 3}, {2, 4}});
    CHECK(is_bipartite(g, &small, &large));
    CHECK(small + large == 5);
    CHECK(small <= large);
    const PropertyReport rep = compute_properties(g);
    CHECK(rep.bipartite_small_side == small);
    CHECK(rep.bipartite_large_side == large);
}

TEST_CASE("modularity matches the definitional formula on a stored partition") {
    // Two triangles joined by one bridge edge.
    GraphDoc doc;
    doc.name = "mod";
    doc.declared_nodes = 6;
    doc.nodes = {"0", "1", "2", "3", "4", "5"};
    doc.edges = {{"0", "1"}, {"0", "2"}, {"1", "2"},
                 {"3", "4"}, {"3", "5"}, {"4", "5"}, {"2", "3"}};
    doc.partition = {{std::vector<std::string>{"0", "1", "2"}},
                     {std::vector<std::string>{"3", "4", "5"}}};
    const Graph g = Graph::from_doc(doc);
    const auto a = dense_adj(g);
    const std::vector<int> part{0, 0, 0, 1, 1, 1};
    const double expected = ref_modularity(a, part);
    CHECK(modularity(g, part) == doctest::Approx(expected).epsilon(1e-12));
    const PropertyReport rep = compute_properties(doc);
    CHECK(rep.modularity == doctest::Approx(expected).epsilon(1e-12));
    // Hand value: m=7, internal 3+3, degree sums 7+7.
    CHECK(expected == doctest::Approx(6.0 / 7.0 - 2 * std::pow(7.0 / 14.0, 2)));
}

TEST_CASE("block attributes drive the partition when no partition statement exists") {
    GraphDoc doc;
    doc.name = "blocks";
    doc.declared_nodes = 4;
    doc.nodes = {"0", "1", "2", "3"};
    doc.edges = {{"0", "1"}, {"2", "3"}};
    for (int i = 0; i < 4; ++i)
        doc.node_attrs[std::to_string(i)]["block"] = std::int64_t{i / 2};
    const Graph g = Graph::from_doc(doc);
    const auto part = partition_for_modularity(doc, g);
    CHECK(part == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("greedy partition never underperforms the trivial single community") {
    RngStream rng(5, "props-greedy");
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = sbm({4, 4}, 0.9, 0.1, rng);
        const auto part = greedy_modularity_partition(g);
        const double q = modularity(g, part);
        CHECK(q >= modularity(g, std::vector<int>(g.num_nodes(), 0)) - 1e-12);
        // Planted two-block structure should be clearly positive.
        CHECK(q > 0.0);
    }
}

TEST_CASE("known normalized-Laplacian spectra") {
    SUBCASE("complete graph: 0 and n/(n-1)") {
        for (int n : {3, 4, 5, 6}) {
            const auto ev = normalized_laplacian_eigenvalues(complete_graph(n));
            REQUIRE(static_cast<int>(ev.size()) == n);
            CHECK(ev.front() == doctest::Approx(0.0).epsilon(1e-9));
            for (int i = 1; i < n; ++i)
                CHECK(ev[i] == doctest::Approx(static_cast<double>(n) / (n - 1)));
        }
    }
    SUBCASE("single edge: {0, 2}") {
        const auto ev = normalized_laplacian_eigenvalues(Graph::from_edges(2, {{0, 1}}));
        REQUIRE(ev.size() == 2);
        CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(ev[1] == doctest::Approx(2.0));
    }
    SUBCASE("4-cycle: {0, 1, 1, 2}") {
        const auto ev = normalized_laplacian_eigenvalues(
            Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
        REQUIRE(ev.size() == 4);
        CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(ev[1] == doctest::Approx(1.0));
        CHECK(ev[2] == doctest::Approx(1.0));
        CHECK(ev[3] == doctest::Approx(2.0));
    }
    SUBCASE("eigenvalues stay in [0, 2] and ascend") {
        RngStream rng(9, "props-spec");
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = gnp(10, 0.3, rng);
            const auto ev = normalized_laplacian_eigenvalues(g);
            for (std::size_t i = 0; i < ev.size(); ++i) {
                CHECK(ev[i] >= -1e-9);
                CHECK(ev[i] <= 2.0 + 1e-9);
                if (i) CHECK(ev[i] >= ev[i - 1] - 1e-9);
            }
        }
    }
}

TEST_CASE("orbit4 profile on hand-checked shapes") {
    SUBCASE("triangle: every node {2 edges, 1 centered 2-path, 1 triangle, 0 4-cycles}") {
        const auto counts = orbit4_counts(Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}));
        for (const auto& c : counts) {
            CHECK(c[0] == 2);
            CHECK(c[1] == 1);
            CHECK(c[2] == 1);
            CHECK(c[3] == 0);
        }
    }
    SUBCASE("4-cycle: every node {2, 1, 0, 1}") {
        const auto counts =
            orbit4_counts(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
        for (const auto& c : counts) {
            CHECK(c[0] == 2);
            CHECK(c[1] == 1);
            CHECK(c[2] == 0);
            CHECK(c[3] == 1);
        }
    }
    SUBCASE("path 0-1-2: middle node centers one 2-path") {
        const auto counts = orbit4_counts(Graph::from_edges(3, {{0, 1}, {1, 2}}));
        CHECK(counts[0] == std::array<int, 4>{1, 0, 0, 0});
        CHECK(counts[1] == std::array<int, 4>{2, 1, 0, 0});
        CHECK(counts[2] == std::array<int, 4>{1, 0, 0, 0});
    }
}

TEST_CASE("grid construction") {
    const Graph g = make_grid_graph(3, 4);
    CHECK(g.num_nodes() == 12);
    CHECK(g.num_edges() == 3 * 3 + 2 * 4);  // r*(c-1) + (r-1)*c
    CHECK(is_connected(g));
    CHECK(is_bipartite(g));
    const PropertyReport rep = compute_properties(g);
    CHECK(rep.max_degree == 4);
    CHECK(rep.min_degree == 2);
}

TEST_CASE("degree sequence is ascending and consistent") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(g.degree_sequence() == std::vector<int>{1, 1, 1, 3});
    const PropertyReport rep = compute_properties(g);
    CHECK(rep.degree_sequence == std::vector<int>{1, 1, 1, 3});
}
