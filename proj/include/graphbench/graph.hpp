// Compact adjacency representation built from a GraphDoc. Exact duplicate
// edges and self-loops are dropped here (the lint stage already reported
// them); all structural metrics operate on this simple graph.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphbench/dsl.hpp"

namespace graphbench {

class Graph {
public:
    Graph() = default;
    Graph(int n, bool directed);

    static Graph from_doc(const GraphDoc& doc);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            bool directed = false);

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool directed() const { return directed_; }

    // Adds the edge unless it is a self-loop or already present.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    void remove_edge(int u, int v);

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }       // out if directed
    const std::vector<int>& in_neighbors(int v) const { return radj_[v]; }   // == adj_ if undirected
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const;      // total degree (in+out when directed)
    int out_degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(radj_[v].size()); }
    std::vector<int> degree_sequence() const;  // sorted ascending

    // Node index <-> original node id mapping (doc order).
    const std::vector<std::string>& node_ids() const { return ids_; }
    int index_of(const std::string& id) const;  // -1 when unknown

    // Undirected view (used for connectivity/path metrics on directed docs).
    Graph undirected_view() const;

private:
    void rebuild_edges(std::vector<std::pair<int, int>> edges);

    int n_ = 0;
    bool directed_ = false;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> radj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> ids_;
};

}  // namespace graphbench
