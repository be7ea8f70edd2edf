// Structural property computation: connectivity, clustering, path metrics,
// shape predicates (tree/cycle/star/...), modularity, and the normalized
// Laplacian spectrum. Path metrics are computed on the largest component;
// directed docs use the underlying undirected graph for connectivity, path,
// and clustering metrics.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/dsl.hpp"
#include "graphbench/graph.hpp"

namespace graphbench {

struct PropertyReport {
    int num_nodes = 0;
    int num_edges = 0;
    bool directed = false;
    double density = 0.0;
    double mean_local_clustering = 0.0;  // the `clustering_coefficient` property
    double global_clustering = 0.0;      // transitivity, reported for diagnostics
    double average_path_length = 0.0;    // largest component
    int diameter = 0;                    // largest component
    std::vector<int> degree_sequence;    // ascending
    int min_degree = 0;
    int max_degree = 0;
    bool connected = false;
    bool acyclic = false;
    bool bipartite = false;
    int bipartite_small_side = 0;  // the `partition_a` property (smaller side)
    int bipartite_large_side = 0;  // the `partition_b` property
    bool is_tree = false;
    bool is_cycle = false;
    bool is_star = false;
    bool is_path = false;
    bool is_complete = false;
    bool is_regular = false;
    double modularity = 0.0;  // stored partition > block attrs > greedy detection
    std::vector<double> laplacian_eigenvalues;  // ascending, in [0, 2]
    std::vector<double> local_clustering_values;       // per node, in [0, 1]
    std::vector<std::array<int, 4>> orbit4_counts_per_node;  // see orbit4_counts
};

PropertyReport compute_properties(const GraphDoc& doc);
PropertyReport compute_properties(const Graph& g);

// Building blocks, exposed for tests and samplers.
std::vector<int> component_labels(const Graph& g);  // on the undirected view
bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);  // forest (undirected) / DAG (directed)
bool is_bipartite(const Graph& g, int* small_side = nullptr, int* large_side = nullptr);
std::vector<double> local_clustering(const Graph& g);
double mean_local_clustering(const Graph& g);
double global_clustering(const Graph& g);
// Average shortest-path length and diameter over the largest component.
void path_metrics(const Graph& g, double* apl, int* diameter);
double graph_density(const Graph& g);

// Newman modularity of a node partition (labels per node index).
double modularity(const Graph& g, const std::vector<int>& labels);
// Deterministic CNM-style greedy agglomerative community detection.
std::vector<int> greedy_modularity_partition(const Graph& g);
// The partition used when scoring a doc: stored partition statement first,
// then per-node integer `block` attributes, then greedy detection.
std::vector<int> partition_for_modularity(const GraphDoc& doc, const Graph& g);

std::vector<double> normalized_laplacian_eigenvalues(const Graph& g);

// Lightweight 4-category orbit profile per node, on the undirected view:
// {incident edges, 2-paths centered at the node, triangles containing it,
// 4-cycles passing through it (not necessarily induced)}.
std::vector<std::array<int, 4>> orbit4_counts(const Graph& g);

Graph make_grid_graph(int rows, int cols);

}  // namespace graphbench
