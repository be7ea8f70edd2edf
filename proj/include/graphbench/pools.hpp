// Graph samplers (trees, G(n,p)/G(n,m), regular, bipartite, SBM,
// Watts-Strogatz, Barabasi-Albert, DAGs), the domain prior table, and
// distribution-pool construction for the distribution-driven levels.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/dsl.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/rng.hpp"

namespace graphbench {

// Retry budgets; exhausting one raises a synthesis error, never a silent
// relaxation.
inline constexpr int kReferenceRetryBudget = 500;
inline constexpr int kPoolGraphRetryBudget = 50;

GraphDoc doc_from_graph(const Graph& g, const std::string& name);

// --- elementary samplers (all deterministic under the stream) ---
Graph random_tree(int n, RngStream& rng);          // uniform via Prufer decode
Graph cycle_graph(int n, RngStream& rng);          // random node order
Graph star_graph(int n, RngStream& rng);
Graph path_graph(int n, RngStream& rng);
Graph complete_graph(int n);
Graph gnp(int n, double p, RngStream& rng, bool directed = false);
Graph gnm(int n, int m, RngStream& rng, bool directed = false);
Graph gnm_connected(int n, int m, RngStream& rng);  // spanning tree + extras, m >= n-1
// Simple d-regular via the pairing model with rejection; throws after the
// reference budget.
Graph random_regular(int n, int d, RngStream& rng, bool require_connected = false);
// d-regular bipartite on equal sides (union of d disjoint perfect matchings).
Graph regular_bipartite(int side, int d, RngStream& rng);
// Random bipartite with the given sides; connected repair uses cross edges
// only, so the constructed sides are the graph's bipartition.
Graph random_bipartite(int side_a, int side_b, double p, RngStream& rng,
                       bool require_connected = true);
Graph sbm(const std::vector<int>& block_sizes, double p_in, double p_out, RngStream& rng);
Graph watts_strogatz(int n, int k, double beta, RngStream& rng);
Graph barabasi_albert(int n, int attach, RngStream& rng);
Graph random_dag(int n, int m, RngStream& rng);  // random topological order, forward edges
// Exactly m edges, every degree capped at max_degree; throws when m is
// unreachable under the cap.
Graph gnm_max_degree(int n, int m, int max_degree, RngStream& rng,
                     bool require_connected = false);

// --- domain priors ---
struct DomainPrior {
    std::string name;
    double degree_lo, degree_hi;        // mean degree band
    double clustering_lo, clustering_hi;
    double density_lo, density_hi;
    std::string degree_distribution;    // "power-law" | "roughly-uniform"
    std::string structure_hint;
};

const std::vector<DomainPrior>& domain_priors();  // 8 rows
const DomainPrior* find_domain(const std::string& name);

// One graph honoring the domain's bands: mean degree always, clustering
// within +-0.05, density only when the band is geometrically reachable at
// this n (density = degree/(n-1) shrinks with n at fixed degree). Throws
// after the pool budget.
Graph domain_sample(const DomainPrior& prior, int n, RngStream& rng);

// --- pools ---
enum class SizeBucket { small, medium, large };
std::string to_string(SizeBucket b);
std::optional<SizeBucket> bucket_from_string(const std::string& text);
SizeBucket bucket_for_nodes(int n);  // <=20 / 21..50 / >50
// A node count drawn from the bucket's range ([5,20], [21,50], [51,80]).
int sample_bucket_nodes(SizeBucket b, RngStream& rng);

// The 15 attribute subgroups: 5 singles (density, clustering_coefficient,
// average_path_length, max_degree, diameter) followed by the 10 pairwise
// combinations, pair members joined by '+'.
const std::vector<std::string>& l3_subgroups();

struct PoolSpec {
    int level = 3;          // 3 (attribute subgroup) or 4 (domain)
    std::string subgroup;   // l3_subgroups() entry, or a domain name
    std::array<int, 3> bucket_counts{0, 0, 0};  // small, medium, large
    std::uint64_t seed = 42;
};

// Pool docs named "<subgroup>-<bucket>-<index>", carrying `subgroup` and
// `bucket` graph attributes. Throws when a band stays unreachable within the
// retry budget.
std::vector<GraphDoc> build_pool(const PoolSpec& spec);

// Reads every *.graph file under the directory (sorted by name) as a pool;
// the escape hatch for externally licensed corpora.
std::vector<GraphDoc> import_pool(const std::string& directory);

// Attribute band for an L3 subgroup property at a bucket (lo, hi); exposed
// for tests.
std::pair<double, double> l3_band(const std::string& property, SizeBucket bucket);

// One candidate graph for an attribute subgroup (generator keyed by the
// leading property); n may be bumped to the generator's minimum.
Graph l3_candidate(const std::string& primary, SizeBucket bucket, int n, RngStream& rng);

}  // namespace graphbench
