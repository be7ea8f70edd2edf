#include "graphbench/pools.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graphbench/properties.hpp"

namespace graphbench {

namespace {

std::vector<std::pair<int, int>> all_pairs(int n, bool directed) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = directed ? 0 : i + 1; j < n; ++j)
            if (i != j) pairs.push_back({i, j});
    return pairs;
}

double mean_degree(const Graph& g) {
    if (g.num_nodes() == 0) return 0.0;
    return 2.0 * g.num_edges() / static_cast<double>(g.num_nodes());
}

// Adds an edge closing a random open wedge, raising the clustering
// coefficient; returns false when no open wedge exists.
bool close_random_wedge(Graph& g, RngStream& rng) {
    std::vector<std::array<int, 2>> wedges;
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) wedges.push_back({nb[i], nb[j]});
    }
    if (wedges.empty()) return false;
    auto& w = wedges[rng.uniform(wedges.size())];
    return g.add_edge(w[0], w[1]);
}

Graph grid_like(int n, RngStream& rng) {
    // Aspect ratio varies draw to draw; narrower lattices run sparser, which
    // matters when a density band is being enforced on top.
    int max_rows = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
    int rows = rng.uniform_int(2, max_rows);
    int cols = (n + rows - 1) / rows;
    Graph full = make_grid_graph(rows, cols);
    // Trim overflow nodes from the tail of the lattice.
    if (rows * cols == n) return full;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : full.edges())
        if (u < n && v < n) edges.push_back({u, v});
    return Graph::from_edges(n, edges, false);
}

// Grow the graph to exactly `m_target` edges, choosing endpoints with
// probability proportional to current degree (keeps the heavy tail that the
// preferential-attachment skeleton establishes).
void add_preferential_edges(Graph& g, int m_target, RngStream& rng) {
    int n = g.num_nodes();
    if (n < 2) return;
    auto draw = [&]() {
        long long total = 0;
        for (int v = 0; v < n; ++v) total += g.degree(v) + 1;
        long long ticket = static_cast<long long>(rng.uniform(static_cast<std::uint64_t>(total)));
        for (int v = 0; v < n; ++v) {
            ticket -= g.degree(v) + 1;
            if (ticket < 0) return v;
        }
        return n - 1;
    };
    int guard = 0;
    while (g.num_edges() < m_target && guard < 500 * (m_target + 1)) {
        ++guard;
        int u = draw(), v = draw();
        if (u != v) g.add_edge(u, v);
    }
}

}  // namespace

GraphDoc doc_from_graph(const Graph& g, const std::string& name) {
    GraphDoc doc;
    doc.name = name;
    doc.directed = g.directed();
    doc.declared_nodes = g.num_nodes();
    for (int i = 0; i < g.num_nodes(); ++i) doc.nodes.push_back(std::to_string(i));
    for (auto [u, v] : g.edges())
        doc.edges.push_back(canonical_edge(std::to_string(u), std::to_string(v),
                                           g.directed()));
    return doc;
}

Graph random_tree(int n, RngStream& rng) {
    Graph g(n, false);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = static_cast<int>(rng.uniform(n));
    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    for (int x : prufer) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (degree[leaf] == 1) {
                g.add_edge(leaf, x);
                --degree[leaf];
                --degree[x];
                break;
            }
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) {
            if (u < 0)
                u = v;
            else
                g.add_edge(u, v);
        }
    return g;
}

Graph cycle_graph(int n, RngStream& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    Graph g(n, false);
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
    return g;
}

Graph star_graph(int n, RngStream& rng) {
    Graph g(n, false);
    if (n < 2) return g;
    int center = static_cast<int>(rng.uniform(n));
    for (int v = 0; v < n; ++v)
        if (v != center) g.add_edge(center, v);
    return g;
}

Graph path_graph(int n, RngStream& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    Graph g(n, false);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(order[i], order[i + 1]);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph gnp(int n, double p, RngStream& rng, bool directed) {
    Graph g(n, directed);
    for (auto [u, v] : all_pairs(n, directed))
        if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph gnm(int n, int m, RngStream& rng, bool directed) {
    std::vector<std::pair<int, int>> pairs = all_pairs(n, directed);
    if (m > static_cast<int>(pairs.size()))
        throw std::invalid_argument("gnm: " + std::to_string(m) +
                                    " edges exceed the simple-graph maximum");
    rng.shuffle(pairs);
    Graph g(n, directed);
    for (int i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

Graph gnm_connected(int n, int m, RngStream& rng) {
    if (m < n - 1) throw std::invalid_argument("gnm_connected needs m >= n-1");
    Graph g = random_tree(n, rng);
    std::vector<std::pair<int, int>> rest;
    for (auto [u, v] : all_pairs(n, false))
        if (!g.has_edge(u, v)) rest.push_back({u, v});
    if (m - (n - 1) > static_cast<int>(rest.size()))
        throw std::invalid_argument("gnm_connected: edge count exceeds the maximum");
    rng.shuffle(rest);
    for (int i = 0; i < m - (n - 1); ++i) g.add_edge(rest[i].first, rest[i].second);
    return g;
}

Graph random_regular(int n, int d, RngStream& rng, bool require_connected) {
    if (d < 0 || d > n - 1 || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: no simple " + std::to_string(d) +
                                    "-regular graph on " + std::to_string(n) + " nodes");
    // Circulant start (always a valid simple d-regular graph), randomized by
    // degree-preserving double-edge swaps. Unlike restart pairing, this cannot
    // fail outright for dense degrees.
    Graph g(n, false);
    for (int v = 0; v < n; ++v) {
        for (int step = 1; step <= d / 2; ++step) g.add_edge(v, (v + step) % n);
        if (d % 2) g.add_edge(v, (v + n / 2) % n);  // n is even when d is odd
    }
    std::vector<std::pair<int, int>> edges = g.edges();
    auto attempt_swap = [&]() {
        std::size_t i = rng.uniform(edges.size()), j = rng.uniform(edges.size());
        if (i == j) return;
        auto [a, b] = edges[i];
        auto [c, e] = edges[j];
        if (rng.bernoulli(0.5)) std::swap(c, e);
        if (a == c || a == e || b == c || b == e) return;
        if (g.has_edge(a, c) || g.has_edge(b, e)) return;
        g.remove_edge(a, b);
        g.remove_edge(c, e);
        g.add_edge(a, c);
        g.add_edge(b, e);
        edges[i] = {a, c};
        edges[j] = {b, e};
    };
    const std::size_t mixing = 10 * edges.size();
    if (edges.size() >= 2)
        for (std::size_t t = 0; t < mixing; ++t) attempt_swap();
    if (require_connected) {
        for (int round = 0; round < kReferenceRetryBudget && !is_connected(g); ++round)
            for (std::size_t t = 0; t < edges.size(); ++t) attempt_swap();
        if (!is_connected(g))
            throw std::runtime_error("random_regular: no connected sample for n=" +
                                     std::to_string(n) + " d=" + std::to_string(d));
    }
    return g;
}

Graph regular_bipartite(int side, int d, RngStream& rng) {
    if (d > side)
        throw std::invalid_argument("regular_bipartite: degree exceeds the side size");
    for (int attempt = 0; attempt < kReferenceRetryBudget; ++attempt) {
        Graph g(2 * side, false);
        bool ok = true;
        for (int round = 0; round < d && ok; ++round) {
            std::vector<int> perm(side);
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            for (int i = 0; i < side; ++i)
                if (!g.add_edge(i, side + perm[i])) {
                    ok = false;
                    break;
                }
        }
        if (ok) return g;
    }
    throw std::runtime_error("regular_bipartite: retry budget exhausted");
}

Graph random_bipartite(int side_a, int side_b, double p, RngStream& rng,
                       bool require_connected) {
    Graph g(side_a + side_b, false);
    for (int a = 0; a < side_a; ++a)
        for (int b = 0; b < side_b; ++b)
            if (rng.bernoulli(p)) g.add_edge(a, side_a + b);
    if (require_connected) {
        while (!is_connected(g)) {
            std::vector<int> comp = component_labels(g);
            int a = static_cast<int>(rng.uniform(side_a));
            int b = side_a + static_cast<int>(rng.uniform(side_b));
            if (comp[a] != comp[b]) g.add_edge(a, b);
        }
    }
    return g;
}

Graph sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
          RngStream& rng) {
    int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    std::vector<int> block_of(n);
    int offset = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b)
        for (int i = 0; i < block_sizes[b]; ++i) block_of[offset++] = static_cast<int>(b);
    Graph g(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(block_of[i] == block_of[j] ? p_in : p_out)) g.add_edge(i, j);
    return g;
}

Graph watts_strogatz(int n, int k, double beta, RngStream& rng) {
    int half = std::max(1, k / 2);
    Graph g(n, false);
    for (int v = 0; v < n; ++v)
        for (int step = 1; step <= half; ++step) g.add_edge(v, (v + step) % n);
    // Rewire each original lattice edge with probability beta.
    for (int v = 0; v < n; ++v)
        for (int step = 1; step <= half; ++step) {
            int w = (v + step) % n;
            if (!rng.bernoulli(beta) || !g.has_edge(v, w)) continue;
            int target = static_cast<int>(rng.uniform(n));
            if (target == v || g.has_edge(v, target)) continue;
            g.remove_edge(v, w);
            g.add_edge(v, target);
        }
    return g;
}

Graph barabasi_albert(int n, int attach, RngStream& rng) {
    int m0 = std::max(attach + 1, 2);
    if (n < m0) throw std::invalid_argument("barabasi_albert: n too small");
    Graph g(n, false);
    std::vector<int> chances;  // one entry per endpoint, degree-proportional
    for (int i = 0; i < m0; ++i)
        for (int j = i + 1; j < m0; ++j) {
            g.add_edge(i, j);
            chances.push_back(i);
            chances.push_back(j);
        }
    for (int v = m0; v < n; ++v) {
        std::vector<int> targets;
        int guard = 0;
        while (static_cast<int>(targets.size()) < attach && guard++ < 1000) {
            int t = chances[rng.uniform(chances.size())];
            if (t != v && std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (int t : targets) {
            g.add_edge(v, t);
            chances.push_back(v);
            chances.push_back(t);
        }
    }
    return g;
}

Graph random_dag(int n, int m, RngStream& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({order[i], order[j]});
    if (m > static_cast<int>(pairs.size()))
        throw std::invalid_argument("random_dag: too many edges requested");
    rng.shuffle(pairs);
    Graph g(n, true);
    for (int i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

Graph gnm_max_degree(int n, int m, int max_degree, RngStream& rng,
                     bool require_connected) {
    if (static_cast<long long>(n) * max_degree < 2LL * m)
        throw std::invalid_argument("gnm_max_degree: cap makes the edge count unreachable");
    for (int attempt = 0; attempt < kReferenceRetryBudget; ++attempt) {
        Graph g(n, false);
        if (require_connected) {
            // Degree-capped random tree: attach each node to a non-saturated one.
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            for (int i = 1; i < n; ++i) {
                std::vector<int> open;
                for (int j = 0; j < i; ++j)
                    if (g.degree(order[j]) < max_degree) open.push_back(order[j]);
                if (open.empty()) break;
                g.add_edge(order[i], open[rng.uniform(open.size())]);
            }
            if (g.num_edges() < n - 1) continue;
        }
        std::vector<std::pair<int, int>> pairs = all_pairs(n, false);
        rng.shuffle(pairs);
        for (auto [u, v] : pairs) {
            if (g.num_edges() >= m) break;
            if (g.degree(u) < max_degree && g.degree(v) < max_degree) g.add_edge(u, v);
        }
        if (g.num_edges() == m) return g;
    }
    throw std::runtime_error("gnm_max_degree: retry budget exhausted");
}

const std::vector<DomainPrior>& domain_priors() {
    static const std::vector<DomainPrior> kPriors = {
        {"social", 4.0, 6.0, 0.40, 0.70, 0.30, 0.50, "power-law",
         "friend circles with a few highly connected hubs"},
        {"citation", 2.5, 4.0, 0.05, 0.25, 0.05, 0.15, "power-law",
         "directed acyclic flow toward seminal-paper hubs"},
        {"biological", 2.0, 5.0, 0.10, 0.40, 0.10, 0.30, "power-law",
         "sparse interactions organized into functional modules"},
        {"ecological", 2.0, 4.0, 0.15, 0.35, 0.10, 0.25, "roughly-uniform",
         "shallow producer-consumer hierarchy"},
        {"communication", 3.0, 8.0, 0.20, 0.50, 0.30, 0.50, "power-law",
         "a few highly active hubs with bursty interactions"},
        {"infrastructure", 2.0, 4.0, 0.05, 0.20, 0.05, 0.20, "roughly-uniform",
         "grid-like layout with a high-betweenness backbone"},
        {"knowledge_graph", 2.0, 6.0, 0.05, 0.30, 0.05, 0.20, "power-law",
         "typed relations radiating from broad-concept hubs"},
        {"molecular", 1.5, 3.5, 0.00, 0.15, 0.05, 0.25, "roughly-uniform",
         "valence-limited bonds (carbon <=4, nitrogen <=3, oxygen <=2)"},
    };
    return kPriors;
}

const DomainPrior* find_domain(const std::string& name) {
    for (const auto& p : domain_priors())
        if (p.name == name) return &p;
    return nullptr;
}

Graph domain_sample(const DomainPrior& prior, int n, RngStream& rng) {
    constexpr double kDegreeSlack = 0.25;
    constexpr double kRatioSlack = 0.05;  // clustering and density tolerance

    // Density is only enforceable when its band intersects what the degree
    // band allows at this n (density = mean_degree/(n-1)).
    double implied_lo = prior.density_lo * (n - 1);
    double implied_hi = prior.density_hi * (n - 1);
    bool density_reachable =
        implied_lo <= prior.degree_hi + kDegreeSlack && implied_hi >= prior.degree_lo - kDegreeSlack;

    for (int attempt = 0; attempt < kPoolGraphRetryBudget; ++attempt) {
        double d_lo = prior.degree_lo, d_hi = prior.degree_hi;
        if (density_reachable) {
            d_lo = std::max(d_lo, implied_lo);
            d_hi = std::min(d_hi, implied_hi);
        }
        double target_degree = d_lo + rng.uniform_real() * std::max(0.0, d_hi - d_lo);
        Graph g;
        if (prior.name == "social" || prior.name == "communication") {
            int k = std::max(2, 2 * static_cast<int>(std::lround(target_degree / 2.0)));
            if (n <= k + 2) k = std::max(2, 2 * ((n - 2) / 2));
            g = watts_strogatz(n, k, 0.12 + 0.1 * rng.uniform_real(), rng);
        } else if (prior.name == "citation" || prior.name == "knowledge_graph" ||
                   prior.name == "biological") {
            // Preferential tree skeleton topped up to the exact edge budget;
            // integer attachment counts alone cannot hit fractional degree
            // targets.
            int m_target = static_cast<int>(std::lround(target_degree * n / 2.0));
            m_target = std::clamp(m_target, n - 1, n * (n - 1) / 2);
            g = barabasi_albert(n, 1, rng);
            add_preferential_edges(g, m_target, rng);
        } else if (prior.name == "ecological") {
            g = gnp(n, std::min(0.95, target_degree / std::max(1, n - 1)), rng);
        } else if (prior.name == "infrastructure") {
            g = grid_like(n, rng);
        } else if (prior.name == "molecular") {
            int m = static_cast<int>(std::lround(target_degree * n / 2.0));
            m = std::clamp(m, n - 1, 2 * n);
            g = gnm_max_degree(n, m, 4, rng, true);
        } else {
            g = gnp(n, std::min(0.95, target_degree / std::max(1, n - 1)), rng);
        }
        // Pull clustering up into the band where the raw sampler runs low.
        for (int boost = 0; boost < 3 * n; ++boost) {
            if (mean_local_clustering(g) >= prior.clustering_lo) break;
            if (mean_degree(g) > prior.degree_hi + kDegreeSlack) break;
            if (!close_random_wedge(g, rng)) break;
        }
        double deg = mean_degree(g);
        double clus = mean_local_clustering(g);
        double dens = graph_density(g);
        bool ok = deg >= prior.degree_lo - kDegreeSlack && deg <= prior.degree_hi + kDegreeSlack &&
                  clus >= prior.clustering_lo - kRatioSlack &&
                  clus <= prior.clustering_hi + kRatioSlack;
        if (density_reachable)
            ok = ok && dens >= prior.density_lo - kRatioSlack &&
                 dens <= prior.density_hi + kRatioSlack;
        if (ok) return g;
    }
    throw std::runtime_error("domain_sample: bands unreachable for domain '" + prior.name +
                             "' at n=" + std::to_string(n));
}

std::string to_string(SizeBucket b) {
    switch (b) {
        case SizeBucket::small: return "small";
        case SizeBucket::medium: return "medium";
        case SizeBucket::large: return "large";
    }
    return "small";
}

std::optional<SizeBucket> bucket_from_string(const std::string& text) {
    for (SizeBucket b : {SizeBucket::small, SizeBucket::medium, SizeBucket::large})
        if (text == to_string(b)) return b;
    return std::nullopt;
}

SizeBucket bucket_for_nodes(int n) {
    if (n <= 20) return SizeBucket::small;
    if (n <= 50) return SizeBucket::medium;
    return SizeBucket::large;
}

int sample_bucket_nodes(SizeBucket b, RngStream& rng) {
    switch (b) {
        case SizeBucket::small: return rng.uniform_int(5, 20);
        case SizeBucket::medium: return rng.uniform_int(21, 50);
        case SizeBucket::large: return rng.uniform_int(51, 80);
    }
    return 10;
}

const std::vector<std::string>& l3_subgroups() {
    static const std::vector<std::string> kSubgroups = [] {
        const std::vector<std::string> singles = {
            "density", "clustering_coefficient", "average_path_length", "max_degree",
            "diameter"};
        std::vector<std::string> out = singles;
        for (std::size_t i = 0; i < singles.size(); ++i)
            for (std::size_t j = i + 1; j < singles.size(); ++j)
                out.push_back(singles[i] + "+" + singles[j]);
        return out;
    }();
    return kSubgroups;
}

std::pair<double, double> l3_band(const std::string& property, SizeBucket bucket) {
    int b = bucket == SizeBucket::small ? 0 : bucket == SizeBucket::medium ? 1 : 2;
    if (property == "density") {
        constexpr double lo[3] = {0.15, 0.08, 0.04}, hi[3] = {0.45, 0.30, 0.18};
        return {lo[b], hi[b]};
    }
    if (property == "clustering_coefficient") {
        constexpr double lo[3] = {0.20, 0.15, 0.10}, hi[3] = {0.60, 0.50, 0.45};
        return {lo[b], hi[b]};
    }
    if (property == "average_path_length") {
        constexpr double lo[3] = {1.5, 2.0, 2.2}, hi[3] = {3.0, 4.0, 4.5};
        return {lo[b], hi[b]};
    }
    if (property == "max_degree") {
        constexpr double lo[3] = {4, 6, 8}, hi[3] = {9, 16, 24};
        return {lo[b], hi[b]};
    }
    if (property == "diameter") {
        constexpr double lo[3] = {2, 3, 3}, hi[3] = {5, 7, 9};
        return {lo[b], hi[b]};
    }
    throw std::invalid_argument("unknown attribute subgroup property: " + property);
}

namespace {

std::vector<std::string> split_subgroup(const std::string& subgroup) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : subgroup) {
        if (c == '+') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

double property_value(const PropertyReport& rep, const std::string& property) {
    if (property == "density") return rep.density;
    if (property == "clustering_coefficient") return rep.mean_local_clustering;
    if (property == "average_path_length") return rep.average_path_length;
    if (property == "max_degree") return rep.max_degree;
    if (property == "diameter") return rep.diameter;
    throw std::invalid_argument("unknown attribute property: " + property);
}

}  // namespace

// One candidate for an attribute subgroup, generator chosen by the leading
// property.
Graph l3_candidate(const std::string& primary, SizeBucket bucket, int n, RngStream& rng) {
    if (primary == "density") {
        auto [lo, hi] = l3_band("density", bucket);
        double p = lo + rng.uniform_real() * (hi - lo);
        return gnp(n, p, rng);
    }
    if (primary == "clustering_coefficient" || primary == "average_path_length") {
        int k = bucket == SizeBucket::small ? 4 : 6;
        n = std::max(n, k + 4);
        double beta = primary == "clustering_coefficient" ? 0.15 : 0.35;
        return watts_strogatz(n, k, beta + 0.05 * rng.uniform_real(), rng);
    }
    if (primary == "max_degree") {
        int attach = bucket == SizeBucket::large ? 3 : 2;
        n = std::max(n, attach + 3);
        return barabasi_albert(n, attach, rng);
    }
    // diameter: sparse ER just above the connectivity threshold
    double p = bucket == SizeBucket::small ? 0.30 : bucket == SizeBucket::medium ? 0.12 : 0.07;
    return gnp(n, p + 0.05 * rng.uniform_real(), rng);
}

std::vector<GraphDoc> build_pool(const PoolSpec& spec) {
    std::vector<GraphDoc> out;
    const std::array<SizeBucket, 3> buckets = {SizeBucket::small, SizeBucket::medium,
                                               SizeBucket::large};
    for (int bi = 0; bi < 3; ++bi) {
        SizeBucket bucket = buckets[bi];
        for (int i = 0; i < spec.bucket_counts[bi]; ++i) {
            std::string label =
                spec.subgroup + "-" + to_string(bucket) + "-" + std::to_string(i + 1);
            RngStream rng(spec.seed, "pool:" + std::to_string(spec.level) + ":" + label);
            std::optional<Graph> accepted;
            if (spec.level == 4) {
                const DomainPrior* prior = find_domain(spec.subgroup);
                if (!prior)
                    throw std::invalid_argument("unknown domain: " + spec.subgroup);
                int n = sample_bucket_nodes(bucket, rng);
                accepted = domain_sample(*prior, n, rng);
            } else {
                std::vector<std::string> props = split_subgroup(spec.subgroup);
                for (int attempt = 0; attempt < kPoolGraphRetryBudget && !accepted;
                     ++attempt) {
                    Graph g = l3_candidate(props.front(), bucket,
                                           sample_bucket_nodes(bucket, rng), rng);
                    PropertyReport rep = compute_properties(g);
                    bool ok = true;
                    for (const auto& prop : props) {
                        auto [lo, hi] = l3_band(prop, bucket);
                        double v = property_value(rep, prop);
                        if (v < lo || v > hi) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) accepted = std::move(g);
                }
                if (!accepted)
                    throw std::runtime_error("build_pool: bands unreachable for subgroup '" +
                                             spec.subgroup + "' bucket " + to_string(bucket));
            }
            GraphDoc doc = doc_from_graph(*accepted, label);
            doc.graph_attrs["subgroup"] = spec.subgroup;
            doc.graph_attrs["bucket"] = to_string(bucket);
            if (spec.level == 4) doc.graph_attrs["domain"] = spec.subgroup;
            out.push_back(std::move(doc));
        }
    }
    return out;
}

std::vector<GraphDoc> import_pool(const std::string& directory) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory))
        if (entry.is_regular_file() && entry.path().extension() == ".graph")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<GraphDoc> out;
    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        ParseResult r = parse_document(buffer.str());
        if (!r.ok())
            throw std::runtime_error("import_pool: " + path.string() + ": " + r.message);
        out.push_back(*r.doc);
    }
    return out;
}

}  // namespace graphbench
