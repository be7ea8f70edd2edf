// Isomorphism and edit-distance tests against exhaustive reference
// implementations: permutation search for isomorphism, full alignment
// enumeration (matched subsets + bijections) for unit-cost edit distance.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "graphbench/ged.hpp"
#include "graphbench/iso.hpp"
#include "graphbench/pools.hpp"
#include "graphbench/rng.hpp"

using namespace graphbench;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        if (!g.directed() && u > v) std::swap(u, v);
        out.insert({u, v});
    }
    return out;
}

// Reference isomorphism: try all vertex permutations.
bool ref_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges() ||
        a.directed() != b.directed())
        return false;
    const int n = a.num_nodes();
    const auto eb = edge_set(b);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (auto [u, v] : a.edges()) {
            int pu = perm[u], pv = perm[v];
            if (!a.directed() && pu > pv) std::swap(pu, pv);
            if (!eb.count({pu, pv})) {
                match = false;
                break;
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Reference unit-cost edit distance: enumerate every way to match k nodes of
// a to k nodes of b; unmatched nodes are deleted/inserted (cost 1 each),
// edges not preserved by the matching are deleted/inserted (cost 1 each).
int ref_ged(const Graph& a, const Graph& b) {
    const int na = a.num_nodes(), nb = b.num_nodes();
    const auto ea = edge_set(a), eb = edge_set(b);
    int best = na + nb + static_cast<int>(ea.size() + eb.size());

    std::vector<int> nodes_a(na), nodes_b(nb);
    std::iota(nodes_a.begin(), nodes_a.end(), 0);
    std::iota(nodes_b.begin(), nodes_b.end(), 0);

    const int kmax = std::min(na, nb);
    for (int k = 0; k <= kmax; ++k) {
        std::vector<int> pick_a(k), pick_b(k);
        // Enumerate k-subsets of a's nodes.
        std::vector<bool> sel_a(na, false);
        std::fill(sel_a.begin(), sel_a.begin() + k, true);
        std::sort(sel_a.begin(), sel_a.end(), std::greater<bool>());
        do {
            int ia = 0;
            for (int v = 0; v < na; ++v)
                if (sel_a[v]) pick_a[ia++] = v;
            std::vector<bool> sel_b(nb, false);
            std::fill(sel_b.begin(), sel_b.begin() + k, true);
            std::sort(sel_b.begin(), sel_b.end(), std::greater<bool>());
            do {
                int ib = 0;
                for (int v = 0; v < nb; ++v)
                    if (sel_b[v]) pick_b[ib++] = v;
                std::vector<int> order(pick_b);
                std::sort(order.begin(), order.end());
                do {
                    std::vector<int> map_a(na, -1);
                    for (int i = 0; i < k; ++i) map_a[pick_a[i]] = order[i];
                    int common = 0;
                    for (const auto& [u, v] : ea) {
                        int mu = map_a[u], mv = map_a[v];
                        if (mu < 0 || mv < 0) continue;
                        if (!a.directed() && mu > mv) std::swap(mu, mv);
                        if (eb.count({mu, mv})) ++common;
                    }
                    const int cost = (na - k) + (nb - k) +
                                     (static_cast<int>(ea.size()) - common) +
                                     (static_cast<int>(eb.size()) - common);
                    best = std::min(best, cost);
                } while (std::next_permutation(order.begin(), order.end()));
            } while (std::prev_permutation(sel_b.begin(), sel_b.end()));
        } while (std::prev_permutation(sel_a.begin(), sel_a.end()));
    }
    return best;
}

Graph random_graph(RngStream& rng, int max_n, bool directed = false) {
    const int n = 1 + static_cast<int>(rng.uniform(max_n));
    return gnp(n, 0.2 + 0.6 * rng.uniform_real(), rng, directed);
}

Graph permuted_copy(const Graph& g, RngStream& rng) {
    const int n = g.num_nodes();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
    return Graph::from_edges(n, edges, g.directed());
}

}  // namespace

TEST_CASE("isomorphism agrees with permutation search on random pairs") {
    RngStream rng(17, "iso-pairs");
    int yes = 0, no = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Graph a = random_graph(rng, 7);
        const Graph b = trial % 2 == 0 ? permuted_copy(a, rng) : random_graph(rng, 7);
        const bool expected = ref_isomorphic(a, b);
        const IsoResult got = is_isomorphic(a, b);
        REQUIRE(got != IsoResult::too_large);
        CHECK((got == IsoResult::yes) == expected);
        (expected ? yes : no)++;
    }
    // The trial mix must exercise both verdicts.
    CHECK(yes >= 30);
    CHECK(no >= 30);
}

TEST_CASE("isomorphism is directed-aware") {
    // Directed 3-cycle vs. its reversal: isomorphic (relabel).
    const Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, true);
    const Graph r3 = Graph::from_edges(3, {{1, 0}, {2, 1}, {0, 2}}, true);
    CHECK(is_isomorphic(c3, r3) == IsoResult::yes);
    CHECK(ref_isomorphic(c3, r3));
    // Out-star vs in-star: not isomorphic.
    const Graph out_star = Graph::from_edges(3, {{0, 1}, {0, 2}}, true);
    const Graph in_star = Graph::from_edges(3, {{1, 0}, {2, 0}}, true);
    CHECK(is_isomorphic(out_star, in_star) == IsoResult::no);
    CHECK(!ref_isomorphic(out_star, in_star));
    // Directed vs undirected never match.
    const Graph und = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_isomorphic(c3, und) == IsoResult::no);
}

TEST_CASE("degree-profile pruning never changes the verdict") {
    // Co-degree-sequence non-isomorphic pair: C6 vs two triangles.
    const Graph c6 =
        Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const Graph tt = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(is_isomorphic(c6, tt) == IsoResult::no);
    CHECK(!ref_isomorphic(c6, tt));
}

TEST_CASE("oversized inputs report too_large, never a verdict") {
    // Equal node and edge counts, so the cheap invariant screen cannot
    // already answer `no` before the cap applies.
    RngStream rng(23, "iso-large");
    const Graph a = gnm(20, 40, rng);
    const Graph b = gnm(20, 40, rng);
    CHECK(is_isomorphic(a, b, /*node_cap=*/10) == IsoResult::too_large);
}

TEST_CASE("edit distance on hand-checked cases") {
    const Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(ged_exact(tri, tri) == 0);
    CHECK(ged_exact(tri, p3) == 1);   // drop one edge
    CHECK(ged_exact(p3, tri) == 1);   // symmetric
    const Graph k1 = Graph::from_edges(1, {});
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(ged_exact(k1, k2) == 2);    // add node + add edge
    const Graph empty3 = Graph::from_edges(3, {});
    CHECK(ged_exact(tri, empty3) == 3);
}

TEST_CASE("edit distance equals the alignment-enumeration reference") {
    RngStream rng(29, "ged-pairs");
    for (int trial = 0; trial < 50; ++trial) {
        const Graph a = random_graph(rng, 5);
        const Graph b = random_graph(rng, 5);
        const auto got = ged_exact(a, b);
        REQUIRE(got.has_value());
        const int expected = ref_ged(a, b);
        CAPTURE(trial);
        CHECK(*got == expected);
    }
}

TEST_CASE("edit distance is symmetric and zero iff isomorphic") {
    RngStream rng(31, "ged-sym");
    for (int trial = 0; trial < 30; ++trial) {
        const Graph a = random_graph(rng, 5);
        const Graph b = trial % 3 == 0 ? permuted_copy(a, rng) : random_graph(rng, 5);
        const auto ab = ged_exact(a, b);
        const auto ba = ged_exact(b, a);
        REQUIRE(ab.has_value());
        CHECK(*ab == *ba);
        CHECK((*ab == 0) == ref_isomorphic(a, b));
    }
}

TEST_CASE("edit distance respects the node cap") {
    RngStream rng(37, "ged-cap");
    const Graph a = gnp(12, 0.3, rng);
    const Graph b = gnp(12, 0.3, rng);
    CHECK(!ged_exact(a, b, /*node_cap=*/8).has_value());
}
