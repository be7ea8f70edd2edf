#include "graphbench/properties.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <queue>

namespace graphbench {

namespace {

// BFS distances within the undirected view; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.num_nodes(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
        if (g.directed()) {
            for (int w : g.in_neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dist;
}

// Relabel arbitrary community ids to a dense 0..k-1 range (first-seen order).
std::vector<int> compact(std::vector<int> labels) {
    std::map<int, int> remap;
    for (int& l : labels) {
        auto [it, inserted] = remap.emplace(l, static_cast<int>(remap.size()));
        (void)inserted;
        l = it->second;
    }
    return labels;
}

bool dag_check(const Graph& g) {
    int n = g.num_nodes();
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (int w : g.neighbors(v))
            if (--indeg[w] == 0) q.push(w);
    }
    return seen == n;
}

}  // namespace

std::vector<int> component_labels(const Graph& g) {
    int n = g.num_nodes();
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            auto visit = [&](int w) {
                if (label[w] < 0) {
                    label[w] = next;
                    queue.push_back(w);
                }
            };
            for (int w : g.neighbors(v)) visit(w);
            if (g.directed())
                for (int w : g.in_neighbors(v)) visit(w);
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    if (g.num_nodes() <= 1) return true;
    auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

bool is_acyclic(const Graph& g) {
    if (g.directed()) return dag_check(g);
    auto labels = component_labels(g);
    int components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    return g.num_edges() == g.num_nodes() - components;
}

bool is_bipartite(const Graph& g, int* small_side, int* large_side) {
    int n = g.num_nodes();
    std::vector<int> color(n, -1);
    int count0 = 0, count1 = 0;
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        ++count0;
        std::deque<int> queue{s};
        while (!queue.empty() && ok) {
            int v = queue.front();
            queue.pop_front();
            auto visit = [&](int w) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    (color[w] == 0 ? count0 : count1) += 1;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    ok = false;
                }
            };
            for (int w : g.neighbors(v)) visit(w);
            if (g.directed())
                for (int w : g.in_neighbors(v)) visit(w);
        }
    }
    if (!ok) {
        if (small_side) *small_side = 0;
        if (large_side) *large_side = 0;
        return false;
    }
    if (small_side) *small_side = std::min(count0, count1);
    if (large_side) *large_side = std::max(count0, count1);
    return true;
}

std::vector<double> local_clustering(const Graph& g) {
    // Computed on the undirected view.
    const Graph u = g.directed() ? g.undirected_view() : g;
    int n = u.num_nodes();
    std::vector<double> out(n, 0.0);
    for (int v = 0; v < n; ++v) {
        const auto& nb = u.neighbors(v);
        int k = static_cast<int>(nb.size());
        if (k < 2) continue;
        int links = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (u.has_edge(nb[i], nb[j])) ++links;
        out[v] = 2.0 * links / (static_cast<double>(k) * (k - 1));
    }
    return out;
}

double mean_local_clustering(const Graph& g) {
    if (g.num_nodes() == 0) return 0.0;
    auto c = local_clustering(g);
    return std::accumulate(c.begin(), c.end(), 0.0) / c.size();
}

double global_clustering(const Graph& g) {
    const Graph u = g.directed() ? g.undirected_view() : g;
    long long triangles = 0, triples = 0;
    int n = u.num_nodes();
    for (int v = 0; v < n; ++v) {
        const auto& nb = u.neighbors(v);
        long long k = static_cast<long long>(nb.size());
        triples += k * (k - 1) / 2;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (u.has_edge(nb[i], nb[j])) ++triangles;
    }
    if (triples == 0) return 0.0;
    // `triangles` counts each triangle once per apex vertex, i.e. 3x total.
    return static_cast<double>(triangles) / static_cast<double>(triples);
}

void path_metrics(const Graph& g, double* apl, int* diameter) {
    const Graph u = g.directed() ? g.undirected_view() : g;
    auto labels = component_labels(u);
    int n = u.num_nodes();
    if (n == 0) {
        if (apl) *apl = 0.0;
        if (diameter) *diameter = 0;
        return;
    }
    int components = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<int> size(components, 0);
    for (int l : labels) ++size[l];
    int big = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());

    long long dist_sum = 0, pairs = 0;
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        if (labels[v] != big) continue;
        auto dist = bfs_distances(u, v);
        for (int w = 0; w < n; ++w) {
            if (w == v || labels[w] != big) continue;
            dist_sum += dist[w];
            ++pairs;
            diam = std::max(diam, dist[w]);
        }
    }
    if (apl) *apl = pairs ? static_cast<double>(dist_sum) / pairs : 0.0;
    if (diameter) *diameter = diam;
}

double graph_density(const Graph& g) {
    long long n = g.num_nodes();
    if (n <= 1) return 0.0;
    double possible = g.directed() ? static_cast<double>(n) * (n - 1)
                                   : static_cast<double>(n) * (n - 1) / 2.0;
    return g.num_edges() / possible;
}

double modularity(const Graph& g, const std::vector<int>& labels) {
    const Graph u = g.directed() ? g.undirected_view() : g;
    double m = u.num_edges();
    if (m == 0) return 0.0;
    int communities = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<double> intra(communities, 0.0), degree_sum(communities, 0.0);
    for (auto [a, b] : u.edges())
        if (labels[a] == labels[b]) intra[labels[a]] += 1.0;
    for (int v = 0; v < u.num_nodes(); ++v) degree_sum[labels[v]] += u.degree(v);
    double q = 0.0;
    for (int c = 0; c < communities; ++c) {
        double frac = intra[c] / m;
        double deg = degree_sum[c] / (2.0 * m);
        q += frac - deg * deg;
    }
    return q;
}

std::vector<int> greedy_modularity_partition(const Graph& g) {
    // CNM-style agglomeration: start from singletons, repeatedly apply the
    // merge with the best modularity gain (ties: lowest community indices),
    // stop when no merge improves. Deterministic by construction. Merging a
    // and b changes modularity by cross_ab/m - deg_a*deg_b/(2m^2), so each
    // round only needs community degree sums and cross-edge counts.
    const Graph u = g.directed() ? g.undirected_view() : g;
    int n = u.num_nodes();
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    if (n == 0 || u.num_edges() == 0) return labels;
    const double m = u.num_edges();

    while (true) {
        int communities = *std::max_element(labels.begin(), labels.end()) + 1;
        std::vector<double> deg_sum(communities, 0.0);
        for (int v = 0; v < n; ++v) deg_sum[labels[v]] += u.degree(v);
        std::map<std::pair<int, int>, int> cross;
        for (auto [a, b] : u.edges()) {
            int ca = labels[a], cb = labels[b];
            if (ca != cb) cross[{std::min(ca, cb), std::max(ca, cb)}] += 1;
        }
        double best_gain = 1e-12;
        std::pair<int, int> best{-1, -1};
        for (const auto& [communities_pair, count] : cross) {
            auto [ca, cb] = communities_pair;
            double gain = count / m - deg_sum[ca] * deg_sum[cb] / (2.0 * m * m);
            if (gain > best_gain) {
                best_gain = gain;
                best = communities_pair;
            }
        }
        if (best.first < 0) break;
        for (int& l : labels)
            if (l == best.second) l = best.first;
        labels = compact(labels);
    }
    return labels;
}

std::vector<int> partition_for_modularity(const GraphDoc& doc, const Graph& g) {
    int n = g.num_nodes();
    if (doc.partition) {
        std::vector<int> labels(n, 0);
        bool any = false;
        for (std::size_t p = 0; p < doc.partition->size(); ++p) {
            for (const auto& id : (*doc.partition)[p]) {
                int idx = g.index_of(id);
                if (idx >= 0) {
                    labels[idx] = static_cast<int>(p);
                    any = true;
                }
            }
        }
        if (any) return compact(labels);
    }
    {
        std::vector<int> labels(n, -1);
        bool all = n > 0;
        for (int v = 0; v < n; ++v) {
            auto attr = doc.node_attr(g.node_ids()[v], "block");
            if (attr && std::holds_alternative<std::int64_t>(*attr))
                labels[v] = static_cast<int>(std::get<std::int64_t>(*attr));
            else
                all = false;
        }
        if (all) return compact(labels);
    }
    return greedy_modularity_partition(g);
}

std::vector<double> normalized_laplacian_eigenvalues(const Graph& g) {
    const Graph u = g.directed() ? g.undirected_view() : g;
    int n = u.num_nodes();
    if (n == 0) return {};
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> inv_sqrt(n, 0.0);
    for (int v = 0; v < n; ++v) {
        int d = u.degree(v);
        if (d > 0) {
            lap(v, v) = 1.0;
            inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(d));
        }
    }
    for (auto [a, b] : u.edges()) {
        double w = inv_sqrt[a] * inv_sqrt[b];
        lap(a, b) -= w;
        lap(b, a) -= w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    for (double& v : eig) v = std::clamp(v, 0.0, 2.0);  // absorb float noise at the rim
    std::sort(eig.begin(), eig.end());
    return eig;
}

Graph make_grid_graph(int rows, int cols) {
    Graph g(rows * cols, false);
    auto at = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(at(r, c), at(r, c + 1));
            if (r + 1 < rows) g.add_edge(at(r, c), at(r + 1, c));
        }
    }
    return g;
}

PropertyReport compute_properties(const Graph& g) {
    PropertyReport rep;
    int n = g.num_nodes();
    rep.num_nodes = n;
    rep.num_edges = g.num_edges();
    rep.directed = g.directed();
    rep.density = graph_density(g);
    rep.mean_local_clustering = mean_local_clustering(g);
    rep.global_clustering = global_clustering(g);
    path_metrics(g, &rep.average_path_length, &rep.diameter);
    rep.degree_sequence = g.degree_sequence();
    rep.min_degree = rep.degree_sequence.empty() ? 0 : rep.degree_sequence.front();
    rep.max_degree = rep.degree_sequence.empty() ? 0 : rep.degree_sequence.back();
    rep.connected = is_connected(g);
    rep.acyclic = is_acyclic(g);
    rep.bipartite = is_bipartite(g, &rep.bipartite_small_side, &rep.bipartite_large_side);

    const auto& deg = rep.degree_sequence;
    rep.is_regular = n > 0 && deg.front() == deg.back();
    if (!g.directed()) {
        rep.is_tree = n >= 1 && rep.connected && rep.num_edges == n - 1;
        rep.is_cycle = n >= 3 && rep.connected && rep.num_edges == n &&
                       deg.front() == 2 && deg.back() == 2;
        rep.is_star = (n >= 2 && rep.connected && rep.num_edges == n - 1 &&
                       deg.back() == n - 1) ||
                      (n == 1);
        rep.is_path =
            (n == 1) || (n >= 2 && rep.connected && rep.num_edges == n - 1 &&
                         deg.front() == 1 && deg.back() <= 2);
        rep.is_complete = n >= 1 && rep.num_edges == n * (n - 1) / 2;
    }
    rep.modularity = modularity(g, greedy_modularity_partition(g));
    rep.laplacian_eigenvalues = normalized_laplacian_eigenvalues(g);
    rep.local_clustering_values = local_clustering(g);
    rep.orbit4_counts_per_node = orbit4_counts(g);
    return rep;
}

std::vector<std::array<int, 4>> orbit4_counts(const Graph& g) {
    Graph u = g.directed() ? g.undirected_view() : g;
    int n = u.num_nodes();
    std::vector<std::array<int, 4>> out(n, {0, 0, 0, 0});
    for (int v = 0; v < n; ++v) {
        const auto& nb = u.neighbors(v);
        int d = static_cast<int>(nb.size());
        out[v][0] = d;
        out[v][1] = d * (d - 1) / 2;  // 2-paths centered at v
        int triangles = 0;
        int cycles4 = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], c = nb[j];
                if (u.has_edge(a, c)) ++triangles;
                // 4-cycles v-a-b-c-v: common neighbors b of a and c, b != v.
                for (int b : u.neighbors(a))
                    if (b != v && b != c && u.has_edge(b, c)) ++cycles4;
            }
        }
        out[v][2] = triangles;
        out[v][3] = cycles4;
    }
    return out;
}

PropertyReport compute_properties(const GraphDoc& doc) {
    Graph g = Graph::from_doc(doc);
    PropertyReport rep = compute_properties(g);
    rep.modularity = modularity(g, partition_for_modularity(doc, g));
    return rep;
}

}  // namespace graphbench
