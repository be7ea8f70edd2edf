#include "graphbench/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "graphbench/iso.hpp"
#include "graphbench/properties.hpp"

namespace graphbench {

namespace {

std::optional<long long> eq_int(const ConstraintSet& set, const std::string& prop) {
    const ConstraintAtom* a = set.find(prop, Relation::eq);
    if (!a || !a->numeric()) return std::nullopt;
    double v = a->number();
    if (v != std::floor(v)) return std::nullopt;
    return static_cast<long long>(v);
}

bool bool_atom(const ConstraintSet& set, const std::string& prop) {
    const ConstraintAtom* a = set.find(prop, Relation::eq);
    return a && std::holds_alternative<bool>(a->value) && std::get<bool>(a->value);
}

std::string type_atom(const ConstraintSet& set) {
    const ConstraintAtom* a = set.find("graph_type", Relation::eq);
    return a ? a->value_text() : "";
}

// Raise every deficient node's degree by adding random edges.
void ensure_min_degree(Graph& g, int k, RngStream& rng) {
    for (int pass = 0; pass < kReferenceRetryBudget; ++pass) {
        int v = -1;
        for (int u = 0; u < g.num_nodes(); ++u)
            if (g.degree(u) < k) {
                v = u;
                break;
            }
        if (v < 0) return;
        std::vector<int> candidates;
        for (int u = 0; u < g.num_nodes(); ++u)
            if (u != v && !g.has_edge(v, u)) candidates.push_back(u);
        if (candidates.empty()) return;
        g.add_edge(v, candidates[rng.uniform(candidates.size())]);
    }
}

// One candidate graph for the constraint set; validate() then accepts or
// rejects it.
Graph candidate_for(const ConstraintSet& set, RngStream& rng) {
    auto n_opt = eq_int(set, "num_nodes");
    auto m_opt = eq_int(set, "num_edges");
    auto rows = eq_int(set, "rows");
    auto cols = eq_int(set, "cols");
    auto degree = eq_int(set, "degree");
    auto part_a = eq_int(set, "partition_a");
    auto part_b = eq_int(set, "partition_b");
    bool want_connected = bool_atom(set, "connected");
    bool want_directed = bool_atom(set, "directed");
    bool want_acyclic = bool_atom(set, "acyclic");
    std::string type = type_atom(set);

    int n = 10;
    if (n_opt)
        n = static_cast<int>(*n_opt);
    else if (rows && cols)
        n = static_cast<int>(*rows * *cols);
    else if (part_a && part_b)
        n = static_cast<int>(*part_a + *part_b);
    else if (m_opt)
        n = std::max(5, static_cast<int>(std::ceil((1.0 + std::sqrt(1.0 + 8.0 * *m_opt)) / 2.0)) + 2);

    if (type == "tree") return random_tree(n, rng);
    if (type == "cycle") return cycle_graph(n, rng);
    if (type == "star") return star_graph(n, rng);
    if (type == "path") return path_graph(n, rng);
    if (type == "complete") return complete_graph(n);
    if (type == "grid") {
        int r = rows ? static_cast<int>(*rows) : 0;
        int c = cols ? static_cast<int>(*cols) : 0;
        if (r && !c && n % r == 0) c = n / r;
        if (c && !r && n % c == 0) r = n / c;
        if (!r || !c) {
            r = static_cast<int>(std::sqrt(static_cast<double>(n)));
            while (r > 1 && n % r != 0) --r;
            c = n / std::max(1, r);
        }
        return make_grid_graph(r, c);
    }
    if (type == "dag" || (want_directed && want_acyclic)) {
        int m = m_opt ? static_cast<int>(*m_opt)
                      : std::min(2 * n, n * (n - 1) / 2);
        return random_dag(n, m, rng);
    }
    if (type == "bipartite" || part_a || part_b) {
        int a = part_a ? static_cast<int>(*part_a) : n / 2;
        int b = part_b ? static_cast<int>(*part_b) : n - a;
        if (degree) {
            if (a != b) throw std::runtime_error("regular bipartite needs equal sides");
            return regular_bipartite(a, static_cast<int>(*degree), rng);
        }
        if (m_opt) {
            // Exactly m cross edges: spanning cross tree + random extras.
            Graph g = random_bipartite(a, b, 0.0, rng, true);
            std::vector<std::pair<int, int>> rest;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    if (!g.has_edge(i, a + j)) rest.push_back({i, a + j});
            rng.shuffle(rest);
            for (auto [u, v] : rest) {
                if (g.num_edges() >= static_cast<int>(*m_opt)) break;
                g.add_edge(u, v);
            }
            return g;
        }
        return random_bipartite(a, b, 0.4, rng, true);
    }
    if (degree) return random_regular(n, static_cast<int>(*degree), rng, want_connected);
    if (type == "regular")
        return random_regular(n, degree ? static_cast<int>(*degree) : 3, rng, want_connected);
    if (want_acyclic && !want_directed) {
        Graph tree = random_tree(n, rng);
        if (!m_opt || *m_opt >= n - 1) return tree;
        // Forest: drop random tree edges down to m.
        std::vector<std::pair<int, int>> edges = tree.edges();
        rng.shuffle(edges);
        edges.resize(static_cast<std::size_t>(*m_opt));
        return Graph::from_edges(n, edges, false);
    }

    int m;
    if (m_opt) {
        m = static_cast<int>(*m_opt);
    } else if (const ConstraintAtom* dens = set.find("density")) {
        double target = dens->numeric() ? dens->number() : 0.25;
        m = static_cast<int>(std::lround(target * n * (n - 1) / 2.0));
    } else if (set.has("clustering_coefficient")) {
        int k = std::min(n - 1, 4);
        return watts_strogatz(std::max(n, k + 3), std::max(2, k), 0.2, rng);
    } else {
        m = std::min(n * (n - 1) / 2, static_cast<int>(std::lround(1.8 * n)));
    }

    auto max_deg = eq_int(set, "max_degree");
    const ConstraintAtom* max_le = set.find("max_degree", Relation::le);
    int cap = 0;
    if (max_deg) cap = static_cast<int>(*max_deg);
    if (!cap && max_le && max_le->numeric()) cap = static_cast<int>(max_le->number());

    Graph g;
    if (want_directed) {
        g = gnm(n, m, rng, true);
    } else if (cap > 0) {
        g = gnm_max_degree(n, m, cap, rng, want_connected);
    } else if (want_connected && m >= n - 1) {
        g = gnm_connected(n, m, rng);
    } else {
        g = gnm(n, m, rng);
    }

    auto min_deg = eq_int(set, "min_degree");
    const ConstraintAtom* min_ge = set.find("min_degree", Relation::ge);
    int floor_deg = 0;
    if (min_deg) floor_deg = static_cast<int>(*min_deg);
    if (!floor_deg && min_ge && min_ge->numeric())
        floor_deg = static_cast<int>(min_ge->number());
    if (floor_deg > 0 && !m_opt) ensure_min_degree(g, floor_deg, rng);
    return g;
}

// Adds edges pairing off deficient nodes so every degree reaches d; exact
// backtracking over the canonical pairing order. `skip` (optional) is an edge
// set a solution must differ from.
bool complete_degrees(const Graph& base, std::vector<int>& deficit, Graph& g,
                      std::vector<std::pair<int, int>>& added,
                      const std::set<std::pair<int, int>>* skip, long& budget) {
    if (--budget < 0) return false;
    int u = -1;
    for (int v = 0; v < g.num_nodes(); ++v)
        if (deficit[v] > 0) {
            u = v;
            break;
        }
    if (u < 0) {
        if (!skip) return true;
        std::set<std::pair<int, int>> ours(added.begin(), added.end());
        return ours != *skip;
    }
    for (int v = u + 1; v < g.num_nodes(); ++v) {
        if (deficit[v] <= 0 || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        added.push_back({u, v});
        --deficit[u];
        --deficit[v];
        if (complete_degrees(base, deficit, g, added, skip, budget)) return true;
        ++deficit[u];
        ++deficit[v];
        added.pop_back();
        g.remove_edge(u, v);
    }
    return false;
}

std::optional<Graph> regular_completion_impl(const Graph& base, int d,
                                             const std::set<std::pair<int, int>>* skip) {
    if (base.directed()) return std::nullopt;
    std::vector<int> deficit(base.num_nodes());
    long long total = 0;
    for (int v = 0; v < base.num_nodes(); ++v) {
        deficit[v] = d - base.degree(v);
        if (deficit[v] < 0) return std::nullopt;
        total += deficit[v];
    }
    if (total % 2 != 0) return std::nullopt;
    Graph g = base;
    std::vector<std::pair<int, int>> added;
    long budget = 2'000'000;
    if (complete_degrees(base, deficit, g, added, skip, budget)) return g;
    return std::nullopt;
}

}  // namespace

ConstraintSet InstructionSpec::constraint_set() const {
    ConstraintSet set = make_constraint_set(explicit_constraints);
    for (const auto& text : implicit_constraints)
        set.implicit_atoms.push_back(parse_constraint(text));
    set = infer_implicit(std::move(set));
    set = check_feasibility(std::move(set));
    if (!feasible) set.feasible = false;
    return set;
}

std::string to_string(DedupClass c) {
    switch (c) {
        case DedupClass::distinct: return "distinct";
        case DedupClass::exact_dup: return "exact_dup";
        case DedupClass::iso_only: return "iso_only";
    }
    return "distinct";
}

DedupClass classify_pair(const std::string& ref_a, const std::string& ref_b) {
    ParseResult a = parse_document(ref_a);
    ParseResult b = parse_document(ref_b);
    if (!a.ok() || !b.ok())
        throw std::invalid_argument("classify_pair: both references must parse");
    if (serialize_name_stripped(*a.doc) == serialize_name_stripped(*b.doc))
        return DedupClass::exact_dup;
    if (a.doc->directed != b.doc->directed) return DedupClass::distinct;
    IsoResult iso = is_isomorphic(Graph::from_doc(*a.doc), Graph::from_doc(*b.doc));
    return iso == IsoResult::yes ? DedupClass::iso_only : DedupClass::distinct;
}

GraphDoc synthesize_reference(const ConstraintSet& set, int level, std::uint64_t seed,
                              const std::string& name) {
    if (!set.feasible)
        throw std::invalid_argument("refusing to synthesize a reference for an "
                                    "infeasible constraint set: " +
                                    set.infeasibility_reason);
    RngStream rng(seed, "synthesize:" + name);
    for (int attempt = 0; attempt < kReferenceRetryBudget; ++attempt) {
        Graph g;
        try {
            g = candidate_for(set, rng);
        } catch (const std::exception&) {
            continue;  // an unlucky construction counts against the budget
        }
        GraphDoc doc = doc_from_graph(g, name);
        if (validate(doc, set).empty()) return doc;
    }
    throw std::runtime_error("synthesis failure: retry budget exhausted for level " +
                             std::to_string(level) + " set with " +
                             std::to_string(set.explicit_atoms.size()) + " atoms");
}

std::optional<Graph> make_regular_completion(const Graph& base, int d) {
    return regular_completion_impl(base, d, nullptr);
}

std::optional<Graph> alternative_regular_completion(const Graph& base, int d,
                                                    const Graph& first) {
    std::set<std::pair<int, int>> skip;
    for (auto [u, v] : first.edges())
        if (!base.has_edge(u, v)) skip.insert({std::min(u, v), std::max(u, v)});
    return regular_completion_impl(base, d, &skip);
}

}  // namespace graphbench
