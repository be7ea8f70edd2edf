#include "graphbench/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace graphbench {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed), adj_(n), radj_(n) {
    ids_.reserve(n);
    for (int i = 0; i < n; ++i) ids_.push_back(std::to_string(i));
}

Graph Graph::from_doc(const GraphDoc& doc) {
    Graph g(static_cast<int>(doc.nodes.size()), doc.directed);
    g.ids_ = doc.nodes;
    std::map<std::string, int> index;
    for (int i = 0; i < g.n_; ++i) index[g.ids_[i]] = i;
    for (const auto& e : doc.edges) {
        auto u = index.find(e.first), v = index.find(e.second);
        if (u == index.end() || v == index.end()) continue;  // parser rejects these anyway
        g.add_edge(u->second, v->second);
    }
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges, bool directed) {
    Graph g(n, directed);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    if (has_edge(u, v)) return false;
    if (!directed_ && u > v) std::swap(u, v);
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    radj_[v].push_back(u);
    if (!directed_) {
        adj_[v].push_back(u);
        radj_[u].push_back(v);
    }
    return true;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    std::vector<std::pair<int, int>> kept;
    kept.reserve(edges_.size());
    for (auto e : edges_) {
        bool match = directed_ ? (e.first == u && e.second == v)
                               : (e == std::pair{std::min(u, v), std::max(u, v)});
        if (!match) kept.push_back(e);
    }
    rebuild_edges(std::move(kept));
}

void Graph::rebuild_edges(std::vector<std::pair<int, int>> edges) {
    adj_.assign(n_, {});
    radj_.assign(n_, {});
    edges_.clear();
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::degree(int v) const {
    if (directed_) return out_degree(v) + in_degree(v);
    return static_cast<int>(adj_[v].size());
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = degree(i);
    std::sort(d.begin(), d.end());
    return d;
}

int Graph::index_of(const std::string& id) const {
    for (int i = 0; i < n_; ++i)
        if (ids_[i] == id) return i;
    return -1;
}

Graph Graph::undirected_view() const {
    if (!directed_) return *this;
    Graph g(n_, false);
    g.ids_ = ids_;
    for (auto [u, v] : edges_) g.add_edge(u, v);
    return g;
}

}  // namespace graphbench
