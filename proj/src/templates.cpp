// Instruction-template registry: the per-level families with their size
// quotas, the infeasible designs, document-level edit helpers, and the suite
// orchestrator. Every builder draws only from the per-instruction RNG stream,
// so the suite is byte-reproducible for a given config.
#include "graphbench/templates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphbench/constraints.hpp"
#include "graphbench/pools.hpp"
#include "graphbench/properties.hpp"

namespace graphbench {

namespace {

// ---------------------------------------------------------------- formatting

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

double floor3(double x) { return std::floor(x * 1000.0) / 1000.0; }
double ceil3(double x) { return std::ceil(x * 1000.0) / 1000.0; }

std::string num(int v) { return std::to_string(v); }

// Bucket node ranges; mirrors sample_bucket_nodes.
std::pair<int, int> bucket_range(SizeBucket b) {
    switch (b) {
        case SizeBucket::small: return {5, 20};
        case SizeBucket::medium: return {21, 50};
        default: return {51, 80};
    }
}

// ------------------------------------------------------------- ref plumbing

void set_graph_refs(InstructionSpec& spec, const Graph& a, const Graph& b) {
    spec.reference_solutions.push_back(
        serialize_document(doc_from_graph(a, spec.id + "-ref1")));
    spec.reference_solutions.push_back(
        serialize_document(doc_from_graph(b, spec.id + "-ref2")));
}

void set_doc_refs(InstructionSpec& spec, GraphDoc a, GraphDoc b) {
    a.name = spec.id + "-ref1";
    b.name = spec.id + "-ref2";
    spec.reference_solutions.push_back(serialize_document(a));
    spec.reference_solutions.push_back(serialize_document(b));
}

// --------------------------------------------------------- graph construction

// Random cycle, then raise every node to degree >= k, then sprinkle extras.
Graph min_degree_graph(int n, int k, int extras, RngStream& rng) {
    if (k > n - 1) throw std::invalid_argument("min_degree_graph: k exceeds n-1");
    Graph g = cycle_graph(n, rng);
    while (true) {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (g.degree(i) < k) { v = i; break; }
        if (v < 0) break;
        std::vector<int> cands, needy;
        for (int u = 0; u < n; ++u) {
            if (u == v || g.has_edge(u, v) || g.has_edge(v, u)) continue;
            cands.push_back(u);
            if (g.degree(u) < k) needy.push_back(u);
        }
        if (cands.empty()) throw std::logic_error("min_degree_graph: no partner");
        const std::vector<int>& pool = needy.empty() ? cands : needy;
        g.add_edge(v, pool[rng.uniform(pool.size())]);
    }
    for (int t = 0; t < extras; ++t) {
        int u = rng.uniform_int(0, n - 1), v = rng.uniform_int(0, n - 1);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

// Random cycle plus random extra edges up to exactly m, all degrees <= cap.
Graph banded_degree_graph(int n, int m, int cap, RngStream& rng) {
    Graph g = cycle_graph(n, rng);
    int guard = 0;
    while (g.num_edges() < m) {
        if (++guard > 400 * n)
            throw std::logic_error("banded_degree_graph: fill stalled");
        int u = rng.uniform_int(0, n - 1), v = rng.uniform_int(0, n - 1);
        if (u == v || g.degree(u) >= cap || g.degree(v) >= cap) continue;
        g.add_edge(u, v);
    }
    return g;
}

// Random cycle plus uncapped random extras up to exactly m edges.
Graph cycle_plus(int n, int m, RngStream& rng) {
    Graph g = cycle_graph(n, rng);
    int guard = 0;
    while (g.num_edges() < m) {
        if (++guard > 400 * n) throw std::logic_error("cycle_plus: fill stalled");
        int u = rng.uniform_int(0, n - 1), v = rng.uniform_int(0, n - 1);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

// Uniform tree minus random edges: an acyclic graph with exactly m edges.
Graph forest_graph(int n, int m, RngStream& rng) {
    Graph g = random_tree(n, rng);
    auto es = g.edges();
    rng.shuffle(es);
    for (int i = 0; i < n - 1 - m; ++i) g.remove_edge(es[i].first, es[i].second);
    return g;
}

// Uniform bipartite graph with exactly m cross edges (left 0..a-1, right a..).
Graph bipartite_gnm(int a, int b, int m, RngStream& rng) {
    if (m > a * b) throw std::invalid_argument("bipartite_gnm: m exceeds a*b");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) pairs.push_back({i, a + j});
    rng.shuffle(pairs);
    Graph g(a + b, false);
    for (int t = 0; t < m; ++t) g.add_edge(pairs[t].first, pairs[t].second);
    return g;
}

// Path v0..vD with the remaining nodes attached as leaves on node `hub`;
// diameter exactly D for D >= 2.
Graph broom_graph(int n, int D, int hub) {
    Graph g(n, false);
    for (int i = 0; i < D; ++i) g.add_edge(i, i + 1);
    for (int v = D + 1; v < n; ++v) g.add_edge(hub, v);
    return g;
}

// Bridge components together with random cross edges until connected.
Graph connect_components(Graph g, RngStream& rng) {
    int n = g.num_nodes();
    while (!is_connected(g)) {
        std::vector<int> lab = component_labels(g);
        int u = rng.uniform_int(0, n - 1), v = rng.uniform_int(0, n - 1);
        if (lab[u] == lab[v]) continue;
        g.add_edge(u, v);
    }
    return g;
}

int max_degree_of(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.num_nodes(); ++v) best = std::max(best, g.degree(v));
    return best;
}

// ----------------------------------------------------------- level-4 wording

struct DomainWording {
    const char* name;
    const char* adjective;
    const char* units;
    const char* ties;
    const char* label_kind;  // article included
    const char* edge_type;
};

const std::array<DomainWording, 8> kDomainWording{{
    {"social", "social", "people", "friendship ties", "a person's name", "friends"},
    {"citation", "citation", "papers", "citation links", "a paper identifier", "cites"},
    {"biological", "protein interaction", "proteins", "interactions",
     "a protein name", "interacts"},
    {"ecological", "food-web", "species", "feeding links", "a species name",
     "feeds_on"},
    {"communication", "communication", "devices", "message links",
     "a device identifier", "messages"},
    {"infrastructure", "utility", "stations", "transmission lines",
     "a station identifier", "links"},
    {"knowledge_graph", "knowledge", "concepts", "relations", "a concept name",
     "related_to"},
    {"molecular", "molecular", "atoms", "bonds", "an element symbol", "bonds"},
}};

const std::vector<std::string>& lexicon_for(const std::string& domain) {
    static const std::vector<std::string> social{
        "Alice", "Bob", "Cora", "Dave", "Elena", "Farid", "Grace", "Hugo",
        "Iris", "Jamal", "Kira", "Liam", "Mona", "Nadia", "Omar", "Priya",
        "Quinn", "Rosa", "Sam", "Tara", "Uma", "Victor", "Wendy", "Hope",
        "Yuki", "Zane", "Amber", "Boris", "Carmen", "Dmitri", "Esther",
        "Felix", "Gina", "Hassan", "Ines", "Jill", "Kenji", "Lara", "Marco",
        "Nora"};
    static const std::vector<std::string> citation{
        "Smith2014", "Chen2016", "Garcia2018", "Kumar2015", "Okafor2019",
        "Ivanov2013", "Tanaka2017", "Muller2016", "Rossi2018", "Silva2015",
        "Dubois2019", "Novak2014", "Larsen2016", "Haddad2017", "Olsen2018",
        "Moreau2015", "Weber2019", "Costa2013", "Lindgren2016", "Petrov2017",
        "Yamada2018", "Farrell2014", "Banerjee2019", "Castillo2016",
        "Ahmed2015", "Johansson2017", "Ricci2018", "Zhao2013", "Nakamura2019",
        "Fischer2016", "Almeida2014", "Kovacs2018", "Sato2015", "Mbeki2017",
        "Oliveira2019", "Virtanen2016", "Duarte2018", "Hansen2013", "Leroy2017",
        "Varga2015"};
    static const std::vector<std::string> biological{
        "TP53", "BRCA1", "EGFR", "MYC", "KRAS", "AKT1", "PTEN", "VEGFA",
        "TNF", "IL6", "MAPK1", "STAT3", "JUN", "FOS", "CDK2", "CCND1", "RB1",
        "MDM2", "NFKB1", "HIF1A", "NOTCH1", "WNT3A", "GSK3B", "CTNNB1",
        "SMAD4", "TGFB1", "FGF2", "PDGFRA", "SRC", "ABL1", "RAF1", "MAP2K1",
        "MAPK3", "PIK3CA", "MTOR", "PRKAA1", "FOXO3", "SIRT1", "CASP3",
        "BCL2"};
    static const std::vector<std::string> ecological{
        "osprey", "pike", "perch", "minnow", "mayfly", "algae", "heron",
        "frog", "dragonfly", "snail", "otter", "trout", "caddisfly", "diatom",
        "kingfisher", "stickleback", "waterflea", "duckweed", "newt", "leech",
        "cormorant", "eel", "shrimp", "plankton", "reedwarbler", "beetle",
        "midge", "moss", "grebe", "roach", "tadpole", "hydra", "bittern",
        "carp", "damselfly", "mussel", "watermite", "sedge", "tern", "bream"};
    static const std::vector<std::string> communication = [] {
        std::vector<std::string> v;
        for (const char* stem : {"router", "switch", "relay", "hub", "gateway",
                                 "modem", "sensor", "phone", "tablet", "beacon"})
            for (int i = 1; i <= 4; ++i)
                v.push_back(std::string(stem) + "-" + std::to_string(i));
        return v;
    }();
    static const std::vector<std::string> infrastructure = [] {
        std::vector<std::string> v;
        for (const char* area : {"north", "south", "east", "west", "central",
                                 "harbor", "ridge", "valley", "summit", "river"})
            for (const char* kind : {"station", "substation", "depot", "junction"})
                v.push_back(std::string(area) + "-" + kind);
        return v;
    }();
    static const std::vector<std::string> knowledge{
        "entropy", "gravity", "photosynthesis", "democracy", "algorithm",
        "ecosystem", "inflation", "neuron", "tectonics", "syntax", "momentum",
        "enzyme", "federalism", "recursion", "biodiversity", "supply",
        "synapse", "erosion", "semantics", "inertia", "catalyst", "suffrage",
        "compiler", "habitat", "demand", "cortex", "sediment", "morphology",
        "voltage", "polymer", "parliament", "heuristic", "wetland", "tariff",
        "axon", "glacier", "phoneme", "current", "monomer", "judiciary"};
    static const std::vector<std::string> empty;
    if (domain == "social") return social;
    if (domain == "citation") return citation;
    if (domain == "biological") return biological;
    if (domain == "ecological") return ecological;
    if (domain == "communication") return communication;
    if (domain == "infrastructure") return infrastructure;
    if (domain == "knowledge_graph") return knowledge;
    return empty;  // molecular labels are generated, not listed
}

void assign_labels(GraphDoc& doc, const std::string& domain, RngStream& rng) {
    if (domain == "molecular") {
        for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
            double r = rng.uniform_real();
            const char* el = r < 0.70 ? "C" : (r < 0.85 ? "N" : "O");
            doc.node_attrs[doc.nodes[i]]["label"] = el + std::to_string(i + 1);
        }
        return;
    }
    const std::vector<std::string>& lex = lexicon_for(domain);
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
        std::string label = lex[i % lex.size()];
        if (i >= lex.size()) label += "-" + std::to_string(i / lex.size() + 1);
        doc.node_attrs[doc.nodes[i]]["label"] = label;
    }
}

GraphDoc domain_doc(const Graph& g, const std::string& name,
                    const DomainWording& w, RngStream& rng) {
    GraphDoc doc = doc_from_graph(g, name);
    doc.graph_attrs["domain"] = std::string(w.name);
    doc.graph_attrs["edge_type"] = std::string(w.edge_type);
    assign_labels(doc, w.name, rng);
    return doc;
}

// ------------------------------------------------------------ level-3 pieces

std::vector<std::string> split_props(const std::string& subgroup) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t plus = subgroup.find('+', start);
        if (plus == std::string::npos) {
            out.push_back(subgroup.substr(start));
            return out;
        }
        out.push_back(subgroup.substr(start, plus - start));
        start = plus + 1;
    }
}

bool real_valued_prop(const std::string& p) {
    return p == "density" || p == "clustering_coefficient" ||
           p == "average_path_length";
}

double prop_value(const PropertyReport& r, const std::string& p) {
    if (p == "density") return r.density;
    if (p == "clustering_coefficient") return r.mean_local_clustering;
    if (p == "average_path_length") return r.average_path_length;
    if (p == "max_degree") return r.max_degree;
    if (p == "diameter") return r.diameter;
    throw std::logic_error("unknown attribute property: " + p);
}

double prop_margin(const std::string& p) {
    if (p == "density") return 0.02;
    if (p == "clustering_coefficient") return 0.03;
    return 0.3;  // average_path_length
}

std::string prop_description(const std::string& p) {
    if (p == "density") return "density";
    if (p == "clustering_coefficient") return "average clustering coefficient";
    if (p == "average_path_length") return "average shortest-path length";
    if (p == "max_degree") return "maximum degree";
    return "diameter";
}

bool unit_interval_prop(const std::string& p) {
    return p == "density" || p == "clustering_coefficient";
}

// ------------------------------------------------------------ level-5 pieces

int l5_base_nodes(SizeBucket b, RngStream& rng) {
    switch (b) {
        case SizeBucket::small: return rng.uniform_int(6, 15);
        case SizeBucket::medium: return rng.uniform_int(21, 40);
        default: return rng.uniform_int(51, 70);
    }
}

std::string l5_text(const InstructionSpec& spec, const std::string& op_sentence) {
    return "Here is a graph:\n" + *spec.base_graph + "\n" + op_sentence +
           " Return the complete edited graph.";
}

std::pair<int, int> pick_nonadjacent(const Graph& g, RngStream& rng) {
    int n = g.num_nodes();
    for (int guard = 0; guard < 20000; ++guard) {
        int u = rng.uniform_int(0, n - 1), v = rng.uniform_int(0, n - 1);
        if (u != v && !g.has_edge(u, v) && !g.has_edge(v, u)) return {u, v};
    }
    throw std::logic_error("pick_nonadjacent: no spare pair found");
}

// Decompose a disjoint union of paths into node sequences (isolated nodes
// yield singleton fragments).
std::vector<std::vector<int>> path_fragments(const Graph& h) {
    int n = h.num_nodes();
    std::vector<char> vis(n, 0);
    std::vector<std::vector<int>> frags;
    for (int s = 0; s < n; ++s) {
        if (vis[s] || h.degree(s) > 1) continue;  // walk from path ends only
        std::vector<int> seq{s};
        vis[s] = 1;
        int prev = -1, cur = s;
        while (true) {
            int nxt = -1;
            for (int w : h.neighbors(cur))
                if (w != prev) { nxt = w; break; }
            if (nxt < 0) break;
            seq.push_back(nxt);
            vis[nxt] = 1;
            prev = cur;
            cur = nxt;
        }
        frags.push_back(std::move(seq));
    }
    return frags;
}

Graph cycle_from_fragments(int n, const std::vector<std::vector<int>>& frags) {
    Graph g(n, false);
    for (const auto& f : frags)
        for (std::size_t i = 0; i + 1 < f.size(); ++i) g.add_edge(f[i], f[i + 1]);
    for (std::size_t i = 0; i < frags.size(); ++i) {
        const auto& cur = frags[i];
        const auto& nxt = frags[(i + 1) % frags.size()];
        g.add_edge(cur.back(), nxt.front());
    }
    return g;
}

std::vector<std::pair<int, int>> canonical_edge_set(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        es.push_back({std::min(u, v), std::max(u, v)});
    std::sort(es.begin(), es.end());
    return es;
}

// ---------------------------------------------------------------- registry

struct Family {
    std::string id;
    int level;
    std::array<int, 3> quotas;  // small, medium, large at default suite counts
    std::function<void(InstructionSpec&, SizeBucket, int, RngStream&)> build;
};

void add_l0_families(std::vector<Family>& reg) {
    reg.push_back({"l0-nodes", 0, {8, 5, 5},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        s.instruction = "Generate a graph with " + num(n) + " nodes.";
        s.explicit_constraints = {"num_nodes=" + num(n)};
        set_graph_refs(s, gnp(n, 0.3, rng), gnp(n, 0.3, rng));
    }});
    reg.push_back({"l0-nodes-edges", 0, {7, 5, 5},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, std::min(n * (n - 1) / 2, 2 * n + 5));
        s.instruction = "Generate a graph with " + num(n) + " nodes and " +
                        num(m) + " edges.";
        s.explicit_constraints = {"num_nodes=" + num(n), "num_edges=" + num(m)};
        set_graph_refs(s, gnm(n, m, rng), gnm(n, m, rng));
    }});
    reg.push_back({"l0-edges", 0, {5, 5, 5},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, 2 * n);
        s.instruction = "Generate a graph with " + num(m) + " edges.";
        s.explicit_constraints = {"num_edges=" + num(m)};
        set_graph_refs(s, gnm(n, m, rng), gnm(n, m, rng));
    }});
    reg.push_back({"l0-directed-nodes", 0, {7, 5, 5},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        s.instruction = "Generate a directed graph with " + num(n) + " nodes.";
        s.explicit_constraints = {"directed=true", "num_nodes=" + num(n)};
        set_graph_refs(s, gnp(n, 0.3, rng, true), gnp(n, 0.3, rng, true));
    }});
    reg.push_back({"l0-directed-nodes-edges", 0, {7, 5, 5},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, std::min(n * (n - 1), 2 * n + 5));
        s.instruction = "Generate a directed graph with " + num(n) +
                        " nodes and " + num(m) + " edges.";
        s.explicit_constraints = {"directed=true", "num_nodes=" + num(n),
                                  "num_edges=" + num(m)};
        set_graph_refs(s, gnm(n, m, rng, true), gnm(n, m, rng, true));
    }});
    reg.push_back({"l0-connected-nodes", 0, {6, 5, 5},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        s.instruction = "Generate a connected graph with " + num(n) + " nodes.";
        s.explicit_constraints = {"connected=true", "num_nodes=" + num(n)};
        set_graph_refs(s, gnm_connected(n, rng.uniform_int(n, 2 * n), rng),
                       gnm_connected(n, rng.uniform_int(n, 2 * n), rng));
    }});
}

void add_l1_families(std::vector<Family>& reg) {
    reg.push_back({"l1-family-type", 1, {50, 38, 38},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        static const char* kTypes[5] = {"tree", "cycle", "star", "path", "complete"};
        const std::string type = kTypes[variant % 5];
        int n = sample_bucket_nodes(b, rng);
        if (type == "complete") n = std::min(n, 60);
        const std::string article =
            type == "tree" ? "a tree" : "a " + type + " graph";
        s.instruction = "Generate " + article + " with " + num(n) + " nodes.";
        s.explicit_constraints = {"graph_type=" + type, "num_nodes=" + num(n)};
        if (type == "tree")
            set_graph_refs(s, random_tree(n, rng), random_tree(n, rng));
        else if (type == "cycle")
            set_graph_refs(s, cycle_graph(n, rng), cycle_graph(n, rng));
        else if (type == "star")
            set_graph_refs(s, star_graph(n, rng), star_graph(n, rng));
        else if (type == "path")
            set_graph_refs(s, path_graph(n, rng), path_graph(n, rng));
        else
            set_graph_refs(s, complete_graph(n), complete_graph(n));
    }});
    reg.push_back({"l1-dag", 1, {15, 11, 11},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, std::min(3 * n / 2, n * (n - 1) / 2));
        s.instruction = "Generate a directed acyclic graph with " + num(n) + " nodes.";
        s.explicit_constraints = {"graph_type=dag", "directed=true",
                                  "num_nodes=" + num(n)};
        set_graph_refs(s, random_dag(n, m, rng), random_dag(n, m, rng));
    }});
    reg.push_back({"l1-grid", 1, {15, 11, 11},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        static const std::array<std::pair<int, int>, 3> kRows{{{2, 4}, {4, 7}, {6, 9}}};
        auto [rlo, rhi] = kRows[static_cast<int>(b)];
        int r = rng.uniform_int(rlo, rhi);
        auto [nlo, nhi] = bucket_range(b);
        int cmin = std::max(2, (nlo + r - 1) / r), cmax = nhi / r;
        if (cmin > cmax) throw std::logic_error("grid family: empty column range");
        int c = rng.uniform_int(cmin, cmax);
        s.instruction = "Generate a " + num(r) + " by " + num(c) + " grid graph.";
        s.explicit_constraints = {"graph_type=grid", "rows=" + num(r),
                                  "cols=" + num(c)};
        Graph g1 = make_grid_graph(r, c);
        Graph g2 = r != c ? make_grid_graph(c, r) : g1;
        set_graph_refs(s, g1, g2);
    }});
}

void add_l2_families(std::vector<Family>& reg) {
    reg.push_back({"l2-connected-edges", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, std::min(n * (n - 1) / 2, 2 * n));
        s.instruction = "Generate a connected graph with " + num(n) +
                        " nodes and " + num(m) + " edges.";
        s.explicit_constraints = {"connected=true", "num_nodes=" + num(n),
                                  "num_edges=" + num(m)};
        set_graph_refs(s, gnm_connected(n, m, rng), gnm_connected(n, m, rng));
    }});
    reg.push_back({"l2-regular", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int d = 3 + variant % 4;
        auto [lo, hi] = bucket_range(b);
        int n = std::max(sample_bucket_nodes(b, rng), d + 2);
        if ((n * d) % 2) n += (n + 1 <= hi ? 1 : -1);
        (void)lo;
        s.instruction = "Generate a " + num(d) + "-regular graph with " + num(n) +
                        " nodes.";
        s.explicit_constraints = {"degree=" + num(d), "num_nodes=" + num(n)};
        set_graph_refs(s, random_regular(n, d, rng), random_regular(n, d, rng));
    }});
    reg.push_back({"l2-regular-connected", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int d = 3 + variant % 2;
        auto [lo, hi] = bucket_range(b);
        int n = std::max(sample_bucket_nodes(b, rng), d + 2);
        if ((n * d) % 2) n += (n + 1 <= hi ? 1 : -1);
        (void)lo;
        s.instruction = "Generate a connected " + num(d) + "-regular graph with " +
                        num(n) + " nodes.";
        s.explicit_constraints = {"connected=true", "degree=" + num(d),
                                  "num_nodes=" + num(n)};
        set_graph_refs(s, random_regular(n, d, rng, true),
                       random_regular(n, d, rng, true));
    }});
    reg.push_back({"l2-min-degree", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int k = 2 + variant % 3;
        int n = std::max(sample_bucket_nodes(b, rng), k + 2);
        s.instruction = "Generate a graph with " + num(n) +
                        " nodes in which every node has degree at least " + num(k) + ".";
        s.explicit_constraints = {"min_degree>=" + num(k), "num_nodes=" + num(n)};
        set_graph_refs(s, min_degree_graph(n, k, rng.uniform_int(0, n / 3), rng),
                       min_degree_graph(n, k, rng.uniform_int(0, n / 3), rng));
    }});
    reg.push_back({"l2-max-degree", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int c = 3 + variant % 3;
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n - 1, n * c / 2 - 1);
        s.instruction = "Generate a graph with " + num(n) +
                        " nodes in which no node has degree greater than " + num(c) + ".";
        s.explicit_constraints = {"max_degree<=" + num(c), "num_nodes=" + num(n)};
        set_graph_refs(s, gnm_max_degree(n, m, c, rng), gnm_max_degree(n, m, c, rng));
    }});
    reg.push_back({"l2-degree-range", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int c = 4 + variant % 2;
        int n = sample_bucket_nodes(b, rng);
        int m = std::min(n + rng.uniform_int(n / 4, n / 2), n * c / 2 - 1);
        s.instruction = "Generate a graph with " + num(n) +
                        " nodes in which every node has degree at least 2 and at most " +
                        num(c) + ".";
        s.explicit_constraints = {"min_degree>=2", "max_degree<=" + num(c),
                                  "num_nodes=" + num(n)};
        set_graph_refs(s, banded_degree_graph(n, m, c, rng),
                       banded_degree_graph(n, m, c, rng));
    }});
    reg.push_back({"l2-forest-edges", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n / 2, n - 2);
        s.instruction = "Generate an acyclic graph with " + num(n) +
                        " nodes and exactly " + num(m) + " edges.";
        s.explicit_constraints = {"acyclic=true", "num_nodes=" + num(n),
                                  "num_edges=" + num(m)};
        set_graph_refs(s, forest_graph(n, m, rng), forest_graph(n, m, rng));
    }});
    reg.push_back({"l2-density-band", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int cap = n * (n - 1) / 2;
        int m = rng.uniform_int(n, std::min(cap, 3 * n));
        double d = static_cast<double>(m) / cap;
        double lo = std::max(0.0, floor3(d - 0.03));
        double hi = std::min(1.0, ceil3(d + 0.03));
        s.instruction = "Generate a graph with " + num(n) +
                        " nodes whose density is between " + fmt3(lo) + " and " +
                        fmt3(hi) + ".";
        s.explicit_constraints = {"num_nodes=" + num(n), "density>=" + fmt3(lo),
                                  "density<=" + fmt3(hi)};
        set_graph_refs(s, gnm(n, m, rng), gnm(n, m, rng));
    }});
    reg.push_back({"l2-density-connected", 2, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int cap = n * (n - 1) / 2;
        int m = rng.uniform_int(n, std::min(cap, 3 * n));
        double d = static_cast<double>(m) / cap;
        double lo = std::max(0.0, floor3(d - 0.03));
        double hi = std::min(1.0, ceil3(d + 0.03));
        s.instruction = "Generate a connected graph with " + num(n) +
                        " nodes whose density is between " + fmt3(lo) + " and " +
                        fmt3(hi) + ".";
        s.explicit_constraints = {"connected=true", "num_nodes=" + num(n),
                                  "density>=" + fmt3(lo), "density<=" + fmt3(hi)};
        set_graph_refs(s, gnm_connected(n, m, rng), gnm_connected(n, m, rng));
    }});
    reg.push_back({"l2-bipartite-sides", 2, {3, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int a = rng.uniform_int(2, n / 2), bb = n - a;
        double p = std::min(0.6, 4.0 / bb);
        s.instruction = "Generate a connected bipartite graph with parts of " +
                        num(a) + " and " + num(bb) + " nodes.";
        s.explicit_constraints = {"graph_type=bipartite", "connected=true",
                                  "partition_a=" + num(a), "partition_b=" + num(bb)};
        set_graph_refs(s, random_bipartite(a, bb, p, rng),
                       random_bipartite(a, bb, p, rng));
    }});
    reg.push_back({"l2-bipartite-regular", 2, {3, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int d = 2 + variant % 2;
        int n = sample_bucket_nodes(b, rng);
        int side = std::max(d + 1, (n + 1) / 2);
        s.instruction = "Generate a " + num(d) +
                        "-regular bipartite graph with two parts of " + num(side) +
                        " nodes each.";
        s.explicit_constraints = {"graph_type=bipartite", "degree=" + num(d),
                                  "partition_a=" + num(side),
                                  "partition_b=" + num(side)};
        set_graph_refs(s, regular_bipartite(side, d, rng),
                       regular_bipartite(side, d, rng));
    }});
    reg.push_back({"l2-edges-maxdeg", 2, {3, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int c = 3 + variant % 2;
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n - 1, n * c / 2 - 1);
        s.instruction = "Generate a graph with " + num(n) + " nodes and " + num(m) +
                        " edges in which no node has degree greater than " + num(c) + ".";
        s.explicit_constraints = {"max_degree<=" + num(c), "num_nodes=" + num(n),
                                  "num_edges=" + num(m)};
        set_graph_refs(s, gnm_max_degree(n, m, c, rng), gnm_max_degree(n, m, c, rng));
    }});
    reg.push_back({"l2-edges-mindeg", 2, {3, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n + 1, 2 * n);
        s.instruction = "Generate a graph with " + num(n) + " nodes and exactly " +
                        num(m) + " edges in which every node has degree at least 2.";
        s.explicit_constraints = {"min_degree>=2", "num_nodes=" + num(n),
                                  "num_edges=" + num(m)};
        set_graph_refs(s, cycle_plus(n, m, rng), cycle_plus(n, m, rng));
    }});
    reg.push_back({"l2-spanning-tree", 2, {2, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        s.instruction = "Generate a connected acyclic graph with " + num(n) + " nodes.";
        s.explicit_constraints = {"connected=true", "acyclic=true",
                                  "num_nodes=" + num(n)};
        set_graph_refs(s, random_tree(n, rng), random_tree(n, rng));
    }});
    reg.push_back({"l2-dag-edges", 2, {3, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, std::min(2 * n, n * (n - 1) / 2));
        s.instruction = "Generate a directed acyclic graph with " + num(n) +
                        " nodes and " + num(m) + " edges.";
        s.explicit_constraints = {"directed=true", "acyclic=true",
                                  "num_nodes=" + num(n), "num_edges=" + num(m)};
        set_graph_refs(s, random_dag(n, m, rng), random_dag(n, m, rng));
    }});
    reg.push_back({"l2-bipartite-n", 2, {3, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int a = rng.uniform_int(2, n / 2), bb = n - a;
        double p = std::min(0.6, 4.0 / bb);
        s.instruction = "Generate a bipartite graph with " + num(n) + " nodes.";
        s.explicit_constraints = {"graph_type=bipartite", "num_nodes=" + num(n)};
        set_graph_refs(s, random_bipartite(a, bb, p, rng),
                       random_bipartite(a, bb, p, rng));
    }});
    reg.push_back({"l2-diameter", 2, {3, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        static const std::array<std::pair<int, int>, 3> kBand{{{3, 5}, {4, 7}, {5, 8}}};
        auto [dlo, dhi] = kBand[static_cast<int>(b)];
        int D = rng.uniform_int(dlo, dhi);
        int n = std::max(sample_bucket_nodes(b, rng), D + 2);
        s.instruction = "Generate a graph with " + num(n) +
                        " nodes whose diameter is exactly " + num(D) + ".";
        s.explicit_constraints = {"diameter=" + num(D), "num_nodes=" + num(n)};
        set_graph_refs(s, broom_graph(n, D, 1), broom_graph(n, D, D - 1));
    }});
    reg.push_back({"l2-bipartite-edges", 2, {3, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int a = rng.uniform_int(2, n / 2), bb = n - a;
        int m = rng.uniform_int(n - 1, std::min(a * bb, 2 * n));
        s.instruction = "Generate a bipartite graph with " + num(n) + " nodes and " +
                        num(m) + " edges.";
        s.explicit_constraints = {"graph_type=bipartite", "num_nodes=" + num(n),
                                  "num_edges=" + num(m)};
        set_graph_refs(s, bipartite_gnm(a, bb, m, rng), bipartite_gnm(a, bb, m, rng));
    }});
    reg.push_back({"l2-conn-edges-maxdeg", 2, {2, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, 2 * n - 1);
        s.instruction = "Generate a connected graph with " + num(n) + " nodes and " +
                        num(m) + " edges in which no node has degree greater than 4.";
        s.explicit_constraints = {"connected=true", "max_degree<=4",
                                  "num_nodes=" + num(n), "num_edges=" + num(m)};
        set_graph_refs(s, gnm_max_degree(n, m, 4, rng, true),
                       gnm_max_degree(n, m, 4, rng, true));
    }});
    reg.push_back({"l2-edges-degrange", 2, {2, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n + 1, 2 * n);
        s.instruction = "Generate a graph with " + num(n) + " nodes and exactly " +
                        num(m) +
                        " edges in which every node has degree at least 2 and at most 5.";
        s.explicit_constraints = {"min_degree>=2", "max_degree<=5",
                                  "num_nodes=" + num(n), "num_edges=" + num(m)};
        set_graph_refs(s, banded_degree_graph(n, m, 5, rng),
                       banded_degree_graph(n, m, 5, rng));
    }});
    reg.push_back({"l2-forest-n", 2, {1, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = sample_bucket_nodes(b, rng);
        s.instruction = "Generate an acyclic graph with " + num(n) + " nodes.";
        s.explicit_constraints = {"acyclic=true", "num_nodes=" + num(n)};
        set_graph_refs(s, forest_graph(n, rng.uniform_int(n / 2, n - 2), rng),
                       forest_graph(n, rng.uniform_int(n / 2, n - 2), rng));
    }});
    reg.push_back({"l2-regular-typed", 2, {2, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int d = 3 + variant % 2;
        auto [lo, hi] = bucket_range(b);
        int n = std::max(sample_bucket_nodes(b, rng), d + 2);
        if ((n * d) % 2) n += (n + 1 <= hi ? 1 : -1);
        (void)lo;
        s.instruction = "Generate a regular graph with " + num(n) +
                        " nodes in which every node has degree exactly " + num(d) + ".";
        s.explicit_constraints = {"graph_type=regular", "degree=" + num(d),
                                  "num_nodes=" + num(n)};
        set_graph_refs(s, random_regular(n, d, rng), random_regular(n, d, rng));
    }});
    reg.push_back({"l2-conn-maxdeg", 2, {2, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int c = 3 + variant % 2;
        int n = sample_bucket_nodes(b, rng);
        int m = rng.uniform_int(n, n * c / 2 - 1);
        s.instruction = "Generate a connected graph with " + num(n) +
                        " nodes in which no node has degree greater than " + num(c) + ".";
        s.explicit_constraints = {"connected=true", "max_degree<=" + num(c),
                                  "num_nodes=" + num(n)};
        set_graph_refs(s, gnm_max_degree(n, m, c, rng, true),
                       gnm_max_degree(n, m, c, rng, true));
    }});
}

void add_l3_families(std::vector<Family>& reg) {
    const std::vector<std::string>& subs = l3_subgroups();
    for (std::size_t si = 0; si < subs.size(); ++si) {
        std::array<int, 3> quotas{3, 3, 3};
        quotas[si % 3] = 4;
        const std::string subgroup = subs[si];
        reg.push_back({"l3-" + subgroup, 3, quotas,
                       [subgroup](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
            std::vector<std::string> props = split_props(subgroup);
            Graph g1 = l3_candidate(props[0], b, sample_bucket_nodes(b, rng), rng);
            int n = g1.num_nodes();
            Graph g2 = l3_candidate(props[0], b, n, rng);
            if (g2.num_nodes() != n)
                throw std::logic_error("attribute candidate changed node count");
            PropertyReport r1 = compute_properties(g1), r2 = compute_properties(g2);
            s.explicit_constraints = {"num_nodes=" + num(n)};
            std::string text = "Generate a graph with " + num(n) + " nodes";
            bool first = true;
            for (const std::string& p : props) {
                double v1 = prop_value(r1, p), v2 = prop_value(r2, p);
                double mn = std::min(v1, v2), mx = std::max(v1, v2);
                std::string lo_text, hi_text;
                if (real_valued_prop(p)) {
                    double lo = std::max(0.0, floor3(mn - prop_margin(p)));
                    double hi = ceil3(mx + prop_margin(p));
                    if (unit_interval_prop(p)) hi = std::min(hi, 1.0);
                    lo_text = fmt3(lo);
                    hi_text = fmt3(hi);
                } else {
                    int lo = std::max(1, static_cast<int>(mn) - 1);
                    int hi = static_cast<int>(mx) + 1;
                    lo_text = num(lo);
                    hi_text = num(hi);
                }
                s.explicit_constraints.push_back(p + ">=" + lo_text);
                s.explicit_constraints.push_back(p + "<=" + hi_text);
                text += std::string(first ? " whose " : " and whose ") +
                        prop_description(p) + " is between " + lo_text + " and " +
                        hi_text;
                first = false;
            }
            s.instruction = text + ".";
            set_graph_refs(s, g1, g2);
        }});
    }
}

enum class L4Mode { size, size_ties, hub_cap, clustering, density, ties_hub_cap,
                    connected, path_band };

void add_l4_families(std::vector<Family>& reg) {
    struct Entry { const char* id; L4Mode mode; std::array<int, 3> quotas; };
    static const std::array<Entry, 8> kEntries{{
        {"l4-size", L4Mode::size, {5, 4, 4}},
        {"l4-size-ties", L4Mode::size_ties, {5, 4, 4}},
        {"l4-hub-cap", L4Mode::hub_cap, {5, 4, 4}},
        {"l4-clustering", L4Mode::clustering, {5, 4, 4}},
        {"l4-density", L4Mode::density, {5, 4, 4}},
        {"l4-ties-hubcap", L4Mode::ties_hub_cap, {5, 4, 4}},
        {"l4-connected", L4Mode::connected, {5, 3, 3}},
        {"l4-pathband", L4Mode::path_band, {5, 3, 3}},
    }};
    for (const Entry& e : kEntries) {
        L4Mode mode = e.mode;
        reg.push_back({e.id, 4, e.quotas,
                       [mode](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
            const DomainWording& w = kDomainWording[variant % 8];
            const DomainPrior* prior = find_domain(w.name);
            if (!prior) throw std::logic_error("domain prior missing");
            // Domain band targets degrade below ~a dozen nodes, so the small
            // bucket floors there.
            int n = std::max(sample_bucket_nodes(b, rng), 12);
            s.domain = w.name;
            Graph g1 = domain_sample(*prior, n, rng);
            Graph g2 = domain_sample(*prior, n, rng);
            if (mode == L4Mode::connected) {
                g1 = connect_components(std::move(g1), rng);
                g2 = connect_components(std::move(g2), rng);
            }
            const std::string opening = "Generate a realistic " +
                                        std::string(w.adjective) + " network with " +
                                        num(n) + " " + w.units;
            const std::string label_clause =
                std::string(" Label every node with ") + w.label_kind + ".";
            std::string middle;
            s.explicit_constraints = {"num_nodes=" + num(n)};
            auto band_int = [&](int v1, int v2, int* lo, int* hi) {
                int mn = std::min(v1, v2), mx = std::max(v1, v2);
                *lo = std::max(0, mn - std::max(1, mn / 10));
                *hi = mx + std::max(1, mx / 10);
            };
            switch (mode) {
                case L4Mode::size:
                    middle = ".";
                    break;
                case L4Mode::size_ties: {
                    int lo, hi;
                    band_int(g1.num_edges(), g2.num_edges(), &lo, &hi);
                    s.explicit_constraints.push_back("num_edges>=" + num(lo));
                    s.explicit_constraints.push_back("num_edges<=" + num(hi));
                    middle = " and between " + num(lo) + " and " + num(hi) + " " +
                             w.ties + ".";
                    break;
                }
                case L4Mode::hub_cap: {
                    int cap = std::max(max_degree_of(g1), max_degree_of(g2)) + 1;
                    s.explicit_constraints.push_back("max_degree<=" + num(cap));
                    middle = " in which no node is connected to more than " +
                             num(cap) + " others.";
                    break;
                }
                case L4Mode::clustering: {
                    double c1 = mean_local_clustering(g1), c2 = mean_local_clustering(g2);
                    double lo = std::max(0.0, floor3(std::min(c1, c2) - 0.03));
                    double hi = std::min(1.0, ceil3(std::max(c1, c2) + 0.03));
                    s.explicit_constraints.push_back("clustering_coefficient>=" + fmt3(lo));
                    s.explicit_constraints.push_back("clustering_coefficient<=" + fmt3(hi));
                    middle = " whose average clustering coefficient is between " +
                             fmt3(lo) + " and " + fmt3(hi) + ".";
                    break;
                }
                case L4Mode::density: {
                    double d1 = graph_density(g1), d2 = graph_density(g2);
                    double lo = std::max(0.0, floor3(std::min(d1, d2) - 0.02));
                    double hi = std::min(1.0, ceil3(std::max(d1, d2) + 0.02));
                    s.explicit_constraints.push_back("density>=" + fmt3(lo));
                    s.explicit_constraints.push_back("density<=" + fmt3(hi));
                    middle = " whose density is between " + fmt3(lo) + " and " +
                             fmt3(hi) + ".";
                    break;
                }
                case L4Mode::ties_hub_cap: {
                    int lo, hi;
                    band_int(g1.num_edges(), g2.num_edges(), &lo, &hi);
                    int cap = std::max(max_degree_of(g1), max_degree_of(g2)) + 1;
                    s.explicit_constraints.push_back("num_edges>=" + num(lo));
                    s.explicit_constraints.push_back("num_edges<=" + num(hi));
                    s.explicit_constraints.push_back("max_degree<=" + num(cap));
                    middle = " with between " + num(lo) + " and " + num(hi) + " " +
                             w.ties + ", where no node is connected to more than " +
                             num(cap) + " others.";
                    break;
                }
                case L4Mode::connected:
                    s.explicit_constraints.push_back("connected=true");
                    middle = " that forms a single connected component.";
                    break;
                case L4Mode::path_band: {
                    double a1, a2;
                    int dia;
                    path_metrics(g1, &a1, &dia);
                    path_metrics(g2, &a2, &dia);
                    double lo = std::max(0.0, floor3(std::min(a1, a2) - 0.3));
                    double hi = ceil3(std::max(a1, a2) + 0.3);
                    s.explicit_constraints.push_back("average_path_length>=" + fmt3(lo));
                    s.explicit_constraints.push_back("average_path_length<=" + fmt3(hi));
                    middle = " whose average shortest-path length is between " +
                             fmt3(lo) + " and " + fmt3(hi) + ".";
                    break;
                }
            }
            s.instruction = opening + middle + label_clause;
            set_doc_refs(s, domain_doc(g1, s.id + "-ref1", w, rng),
                         domain_doc(g2, s.id + "-ref2", w, rng));
        }});
    }
}

void add_l5_families(std::vector<Family>& reg) {
    reg.push_back({"l5-edit-basic", 5, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int n = l5_base_nodes(b, rng);
        int m = n + (2 * n) / 5;
        Graph g = gnm_connected(n, m, rng);
        GraphDoc base = doc_from_graph(g, s.id + "-base");
        s.base_graph = serialize_document(base);
        int op = variant % 3;
        if (op == 0) {
            auto [u1, v1] = pick_nonadjacent(g, rng);
            auto [u2, v2] = pick_nonadjacent(g, rng);
            s.explicit_constraints = {"task_type=add_edge", "num_nodes=" + num(n),
                                      "num_edges=" + num(m + 1)};
            s.instruction = l5_text(
                s, "Add exactly one new edge between two nodes that are not yet "
                   "connected by an edge.");
            set_doc_refs(s, doc_add_edge(base, num(u1), num(v1)),
                         doc_add_edge(base, num(u2), num(v2)));
        } else if (op == 1) {
            auto es = g.edges();
            auto e1 = es[rng.uniform(es.size())];
            auto e2 = es[rng.uniform(es.size())];
            s.explicit_constraints = {"task_type=remove_edge", "num_nodes=" + num(n),
                                      "num_edges=" + num(m - 1)};
            s.instruction = l5_text(s, "Remove exactly one edge.");
            set_doc_refs(s, doc_remove_edge(base, num(e1.first), num(e1.second)),
                         doc_remove_edge(base, num(e2.first), num(e2.second)));
        } else {
            int x = rng.uniform_int(0, n - 1);
            int d = g.degree(x);
            s.explicit_constraints = {"task_type=remove_node",
                                      "num_nodes=" + num(n - 1),
                                      "num_edges=" + num(m - d)};
            s.instruction = l5_text(
                s, "Remove node " + num(x) + " and every edge attached to it.");
            GraphDoc r = doc_remove_node(base, num(x));
            set_doc_refs(s, r, r);
        }
    }});
    reg.push_back({"l5-edit-connected", 5, {4, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int n = l5_base_nodes(b, rng);
        int m = n + n / 2;
        Graph g = gnm_connected(n, m, rng);
        GraphDoc base = doc_from_graph(g, s.id + "-base");
        s.base_graph = serialize_document(base);
        if (variant % 2 == 0) {
            auto es = g.edges();
            rng.shuffle(es);
            std::vector<std::pair<int, int>> keepers;
            for (auto [u, v] : es) {
                Graph h = g;
                h.remove_edge(u, v);
                if (is_connected(h)) keepers.push_back({u, v});
                if (keepers.size() == 2) break;
            }
            if (keepers.empty())
                throw std::logic_error("no removable edge keeps the base connected");
            auto e1 = keepers.front();
            auto e2 = keepers.back();
            s.explicit_constraints = {"task_type=remove_edge", "connected=true",
                                      "num_nodes=" + num(n), "num_edges=" + num(m - 1)};
            s.instruction =
                l5_text(s, "Remove exactly one edge while keeping the graph connected.");
            set_doc_refs(s, doc_remove_edge(base, num(e1.first), num(e1.second)),
                         doc_remove_edge(base, num(e2.first), num(e2.second)));
        } else {
            int a1 = rng.uniform_int(0, n - 1);
            int b1 = (a1 + rng.uniform_int(1, n - 1)) % n;
            int a2 = rng.uniform_int(0, n - 1);
            int b2 = (a2 + rng.uniform_int(1, n - 1)) % n;
            s.explicit_constraints = {"task_type=add_node", "connected=true",
                                      "num_nodes=" + num(n + 1),
                                      "num_edges=" + num(m + 2)};
            s.instruction = l5_text(
                s, "Add one new node and connect it to exactly two different "
                   "existing nodes.");
            set_doc_refs(s, doc_add_node(base, num(n), {num(a1), num(b1)}),
                         doc_add_node(base, num(n), {num(a2), num(b2)}));
        }
    }});
    reg.push_back({"l5-edit-tree", 5, {3, 3, 3},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int n = l5_base_nodes(b, rng);
        Graph g = random_tree(n, rng);
        GraphDoc base = doc_from_graph(g, s.id + "-base");
        s.base_graph = serialize_document(base);
        if (variant % 2 == 0) {
            int a1 = rng.uniform_int(0, n - 1);
            int a2 = rng.uniform_int(0, n - 1);
            s.explicit_constraints = {"task_type=add_node", "acyclic=true",
                                      "num_nodes=" + num(n + 1),
                                      "num_edges=" + num(n)};
            s.instruction = l5_text(
                s, "Add one new node and connect it to exactly one existing node, "
                   "keeping the graph free of cycles.");
            set_doc_refs(s, doc_add_node(base, num(n), {num(a1)}),
                         doc_add_node(base, num(n), {num(a2)}));
        } else {
            std::vector<int> leaves;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 1) leaves.push_back(v);
            int x = leaves[rng.uniform(leaves.size())];
            s.explicit_constraints = {"task_type=remove_node", "acyclic=true",
                                      "num_nodes=" + num(n - 1),
                                      "num_edges=" + num(n - 2)};
            s.instruction =
                l5_text(s, "Remove node " + num(x) + " and its single edge.");
            GraphDoc r = doc_remove_node(base, num(x));
            set_doc_refs(s, r, r);
        }
    }});
    reg.push_back({"l5-make-regular", 5, {3, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int variant, RngStream& rng) {
        int d = 3 + variant % 2;
        int n = l5_base_nodes(b, rng);
        if ((n * d) % 2) ++n;
        Graph R = random_regular(n, d, rng);
        int k = rng.uniform_int(1, std::max(1, n / 4));
        auto es = R.edges();
        rng.shuffle(es);
        std::vector<char> used(n, 0);
        std::vector<std::pair<int, int>> removed;
        for (auto [u, v] : es) {
            if (static_cast<int>(removed.size()) == k) break;
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            removed.push_back({u, v});
        }
        GraphDoc base = doc_from_graph(R, s.id + "-base");
        for (auto [u, v] : removed) base = doc_remove_edge(base, num(u), num(v));
        s.base_graph = serialize_document(base);
        s.explicit_constraints = {"task_type=make_regular", "degree=" + num(d),
                                  "num_nodes=" + num(n)};
        s.instruction = l5_text(
            s, "Add the minimum number of edges so that every node has degree "
               "exactly " + num(d) + ".");
        GraphDoc ref1 = doc_from_graph(R, s.id + "-ref1");
        Graph baseG = Graph::from_doc(base);
        std::optional<Graph> alt = alternative_regular_completion(baseG, d, R);
        GraphDoc ref2 = alt ? doc_from_graph(*alt, s.id + "-ref2") : ref1;
        set_doc_refs(s, ref1, ref2);
    }});
    reg.push_back({"l5-form-cycle", 5, {3, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = l5_base_nodes(b, rng);
        Graph C = cycle_graph(n, rng);
        int j = rng.uniform_int(2, 4);
        auto es = C.edges();
        rng.shuffle(es);
        GraphDoc base = doc_from_graph(C, s.id + "-base");
        for (int t = 0; t < j; ++t)
            base = doc_remove_edge(base, num(es[t].first), num(es[t].second));
        s.base_graph = serialize_document(base);
        s.explicit_constraints = {"task_type=form_cycle", "graph_type=cycle",
                                  "num_nodes=" + num(n), "num_edges=" + num(n)};
        s.instruction = l5_text(
            s, "Add edges so that the graph becomes a single cycle visiting all " +
               num(n) + " nodes.");
        GraphDoc ref1 = doc_from_graph(C, s.id + "-ref1");
        GraphDoc ref2 = ref1;
        std::vector<std::vector<int>> frags = path_fragments(Graph::from_doc(base));
        auto original = canonical_edge_set(C);
        for (int attempt = 0; attempt < 8; ++attempt) {
            auto arrangement = frags;
            rng.shuffle(arrangement);
            for (auto& f : arrangement)
                if (rng.bernoulli(0.5)) std::reverse(f.begin(), f.end());
            Graph cand = cycle_from_fragments(n, arrangement);
            if (canonical_edge_set(cand) != original) {
                ref2 = doc_from_graph(cand, s.id + "-ref2");
                break;
            }
        }
        set_doc_refs(s, ref1, ref2);
    }});
    reg.push_back({"l5-add-under-cap", 5, {3, 2, 2},
                   [](InstructionSpec& s, SizeBucket b, int, RngStream& rng) {
        int n = l5_base_nodes(b, rng);
        Graph g = gnm_max_degree(n, n, 3, rng);
        int t = rng.uniform_int(2, 4);
        GraphDoc base = doc_from_graph(g, s.id + "-base");
        s.base_graph = serialize_document(base);
        auto grow = [&](Graph h) {
            int added = 0, guard = 0;
            while (added < t) {
                if (++guard > 20000)
                    throw std::logic_error("capped edge addition stalled");
                int u = rng.uniform_int(0, n - 1), v = rng.uniform_int(0, n - 1);
                if (u == v || h.degree(u) >= 4 || h.degree(v) >= 4) continue;
                if (h.add_edge(u, v)) ++added;
            }
            return h;
        };
        s.explicit_constraints = {"task_type=add_edge", "max_degree<=4",
                                  "num_nodes=" + num(n), "num_edges=" + num(n + t)};
        s.instruction = l5_text(
            s, "Add exactly " + num(t) +
               " new edges while keeping every node's degree at most 4.");
        set_doc_refs(s, doc_from_graph(grow(g), s.id + "-ref1"),
                     doc_from_graph(grow(g), s.id + "-ref2"));
    }});
}

const std::vector<Family>& registry() {
    static const std::vector<Family> reg = [] {
        std::vector<Family> r;
        add_l0_families(r);
        add_l1_families(r);
        add_l2_families(r);
        add_l3_families(r);
        add_l4_families(r);
        add_l5_families(r);
        return r;
    }();
    return reg;
}

// ------------------------------------------------------- infeasible designs

struct InfeasibleDesign {
    const char* instruction;
    std::vector<const char*> ec;
};

const std::array<InfeasibleDesign, 9>& infeasible_designs() {
    static const std::array<InfeasibleDesign, 9> designs{{
        {"Generate a 3-regular graph with 5 nodes.", {"num_nodes=5", "degree=3"}},
        {"Generate a 5-regular graph with 4 nodes.", {"num_nodes=4", "degree=5"}},
        {"Generate a 2-regular bipartite graph whose parts have 3 and 4 nodes.",
         {"graph_type=bipartite", "partition_a=3", "partition_b=4", "degree=2"}},
        {"Generate a connected graph with 6 nodes and exactly 4 edges.",
         {"num_nodes=6", "num_edges=4", "connected=true"}},
        {"Generate a tree with 6 nodes and exactly 6 edges.",
         {"graph_type=tree", "num_nodes=6", "num_edges=6"}},
        {"Generate a graph with 6 nodes and density at least 1.2.",
         {"num_nodes=6", "density>=1.2"}},
        {"Generate a connected graph with 5 nodes and 11 edges.",
         {"num_nodes=5", "num_edges=11", "connected=true"}},
        {"Generate an acyclic graph with 5 nodes and exactly 5 edges.",
         {"num_nodes=5", "num_edges=5", "acyclic=true"}},
        {"Generate a graph with 6 nodes whose density is at most 0.2 and at "
         "least 0.5.",
         {"num_nodes=6", "density<=0.2", "density>=0.5"}},
    }};
    return designs;
}

// ----------------------------------------------------------- orchestration

std::string make_id(int level, int serial) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "L%d-%03d", level, serial);
    return buf;
}

// Per-(family, bucket) counts for a level target: the pinned quotas when the
// target matches their sum, else proportional floors with the remainder
// distributed round-robin in registry order.
std::vector<int> scaled_quotas(const std::vector<const Family*>& fams, int target) {
    std::vector<int> def;
    long long total = 0;
    for (const Family* f : fams)
        for (int b = 0; b < 3; ++b) {
            def.push_back(f->quotas[b]);
            total += f->quotas[b];
        }
    if (target < 0) throw std::invalid_argument("negative level count");
    if (total == target) return def;
    std::vector<int> out(def.size(), 0);
    int sum = 0;
    for (std::size_t i = 0; i < def.size(); ++i) {
        out[i] = static_cast<int>(def[i] * static_cast<long long>(target) / total);
        sum += out[i];
    }
    for (std::size_t i = 0; sum < target; i = (i + 1) % out.size()) {
        ++out[i];
        ++sum;
    }
    return out;
}

void finalize_spec(InstructionSpec& spec, bool expect_feasible) {
    ConstraintSet set = check_feasibility(
        infer_implicit(make_constraint_set(spec.explicit_constraints)));
    spec.implicit_constraints.clear();
    for (const ConstraintAtom& a : set.implicit_atoms)
        spec.implicit_constraints.push_back(a.text());
    spec.feasible = set.feasible;
    if (spec.feasible != expect_feasible)
        throw std::logic_error(spec.id + ": feasibility verdict contradicts the design" +
                               (set.feasible ? "" : " (" + set.infeasibility_reason + ")"));
    if (!spec.feasible) {
        if (!spec.reference_solutions.empty())
            throw std::logic_error(spec.id + ": infeasible spec carries references");
        return;
    }
    if (spec.reference_solutions.size() != 2)
        throw std::logic_error(spec.id + ": expected exactly two references");
    for (const std::string& text : spec.reference_solutions) {
        ParseResult parsed = parse_document(text);
        if (!parsed.ok())
            throw std::logic_error(spec.id + ": reference does not parse: " +
                                   parsed.message);
        std::vector<Violation> violations = validate(*parsed.doc, set);
        if (!violations.empty())
            throw std::logic_error(spec.id + ": reference violates '" +
                                   violations.front().atom.text() + "' (observed " +
                                   violations.front().observed + ")");
    }
}

}  // namespace

std::vector<InstructionSpec> generate_instructions(const SuiteConfig& config) {
    const auto& designs = infeasible_designs();
    if (config.infeasible_l2 < 0 ||
        config.infeasible_l2 > static_cast<int>(designs.size()))
        throw std::invalid_argument(
            "infeasible_l2 must lie in [0, " + std::to_string(designs.size()) +
            "]: only " + std::to_string(designs.size()) +
            " infeasible designs are registered");

    const std::vector<Family>& reg = registry();
    std::vector<InstructionSpec> suite;
    for (int level = 0; level < 6; ++level) {
        std::vector<const Family*> fams;
        for (const Family& f : reg)
            if (f.level == level) fams.push_back(&f);
        int target = config.level_counts[level];
        if (level == 2) {
            target -= config.infeasible_l2;
            if (target < 0)
                throw std::invalid_argument(
                    "level 2 count is smaller than its infeasible share");
        }
        std::vector<int> quotas = scaled_quotas(fams, target);

        int serial = 0;
        std::vector<int> variant(fams.size(), 0);
        std::size_t cell = 0;
        for (std::size_t fi = 0; fi < fams.size(); ++fi) {
            for (int b = 0; b < 3; ++b, ++cell) {
                for (int q = 0; q < quotas[cell]; ++q) {
                    InstructionSpec spec;
                    spec.level = level;
                    spec.id = make_id(level, ++serial);
                    SizeBucket bucket = static_cast<SizeBucket>(b);
                    spec.graph_sizes = {to_string(bucket)};
                    RngStream rng(config.seed, spec.id);
                    fams[fi]->build(spec, bucket, variant[fi]++, rng);
                    finalize_spec(spec, true);
                    suite.push_back(std::move(spec));
                }
            }
        }
        if (level == 2) {
            for (int k = 0; k < config.infeasible_l2; ++k) {
                const InfeasibleDesign& d = designs[k];
                InstructionSpec spec;
                spec.level = 2;
                spec.id = make_id(2, ++serial);
                spec.instruction = d.instruction;
                for (const char* c : d.ec) spec.explicit_constraints.push_back(c);
                spec.graph_sizes = {"small"};
                finalize_spec(spec, false);
                suite.push_back(std::move(spec));
            }
        }
    }
    return suite;
}

std::string template_key(const InstructionSpec& spec) {
    std::vector<std::string> props;
    for (const std::string& text : spec.explicit_constraints)
        props.push_back(parse_constraint(text).property);
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    std::string key = "L" + std::to_string(spec.level) + "|";
    for (std::size_t i = 0; i < props.size(); ++i) {
        if (i) key += ',';
        key += props[i];
    }
    return key;
}

std::vector<std::string> registry_family_ids() {
    std::vector<std::string> ids;
    for (const Family& f : registry()) ids.push_back(f.id);
    return ids;
}

// ------------------------------------------------- document-level edits

namespace {
int edge_index_of(const GraphDoc& doc, const Edge& e) {
    for (std::size_t i = 0; i < doc.edges.size(); ++i)
        if (doc.edges[i] == e) return static_cast<int>(i);
    return -1;
}
}  // namespace

GraphDoc doc_add_edge(const GraphDoc& base, const std::string& u, const std::string& v) {
    if (u == v) throw std::invalid_argument("doc_add_edge: self-loop on " + u);
    if (!base.has_node(u))
        throw std::invalid_argument("doc_add_edge: unknown node '" + u + "'");
    if (!base.has_node(v))
        throw std::invalid_argument("doc_add_edge: unknown node '" + v + "'");
    GraphDoc doc = base;
    Edge e = canonical_edge(u, v, doc.directed);
    if (edge_index_of(doc, e) >= 0)
        throw std::invalid_argument("doc_add_edge: edge (" + u + ", " + v +
                                    ") already present");
    doc.edges.push_back(e);
    return doc;
}

GraphDoc doc_remove_edge(const GraphDoc& base, const std::string& u,
                         const std::string& v) {
    GraphDoc doc = base;
    Edge e = canonical_edge(u, v, doc.directed);
    int idx = edge_index_of(doc, e);
    if (idx < 0)
        throw std::invalid_argument("doc_remove_edge: no edge (" + u + ", " + v + ")");
    doc.edges.erase(doc.edges.begin() + idx);
    std::erase_if(doc.edge_attrs, [&](const EdgeAttr& a) { return a.edge == e; });
    return doc;
}

GraphDoc doc_add_node(const GraphDoc& base, const std::string& id,
                      const std::vector<std::string>& attach_to) {
    if (base.has_node(id))
        throw std::invalid_argument("doc_add_node: node '" + id + "' already exists");
    GraphDoc doc = base;
    doc.nodes.push_back(id);
    if (doc.declared_nodes) doc.declared_nodes = static_cast<int>(doc.nodes.size());
    for (const std::string& anchor : attach_to) {
        if (anchor == id)
            throw std::invalid_argument("doc_add_node: self-loop on " + id);
        if (!doc.has_node(anchor))
            throw std::invalid_argument("doc_add_node: unknown anchor '" + anchor + "'");
        Edge e = canonical_edge(id, anchor, doc.directed);
        if (edge_index_of(doc, e) >= 0)
            throw std::invalid_argument("doc_add_node: duplicate anchor '" + anchor + "'");
        doc.edges.push_back(e);
    }
    return doc;
}

GraphDoc doc_remove_node(const GraphDoc& base, const std::string& id) {
    if (!base.has_node(id))
        throw std::invalid_argument("doc_remove_node: unknown node '" + id + "'");
    GraphDoc doc = base;
    std::erase(doc.nodes, id);
    if (doc.declared_nodes) doc.declared_nodes = static_cast<int>(doc.nodes.size());
    std::erase_if(doc.edges,
                  [&](const Edge& e) { return e.first == id || e.second == id; });
    std::erase_if(doc.edge_attrs, [&](const EdgeAttr& a) {
        return a.edge.first == id || a.edge.second == id;
    });
    doc.node_attrs.erase(id);
    if (doc.partition)
        for (auto& cls : *doc.partition) std::erase(cls, id);
    return doc;
}

}  // namespace graphbench
