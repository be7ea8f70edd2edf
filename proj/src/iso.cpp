#include "graphbench/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace graphbench {

namespace {

// Per-node invariant: (in-degree, out-degree, sorted neighbor degree profile).
struct NodeProfile {
    int in = 0;
    int out = 0;
    std::vector<int> neighbor_degrees;

    bool operator==(const NodeProfile& o) const = default;
    auto operator<=>(const NodeProfile& o) const = default;
};

std::vector<NodeProfile> profiles(const Graph& g) {
    int n = g.num_nodes();
    std::vector<NodeProfile> p(n);
    for (int v = 0; v < n; ++v) {
        p[v].in = g.in_degree(v);
        p[v].out = g.out_degree(v);
        for (int w : g.neighbors(v)) p[v].neighbor_degrees.push_back(g.degree(w));
        if (g.directed())
            for (int w : g.in_neighbors(v)) p[v].neighbor_degrees.push_back(g.degree(w));
        std::sort(p[v].neighbor_degrees.begin(), p[v].neighbor_degrees.end());
    }
    return p;
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    const std::vector<NodeProfile>& pa;
    const std::vector<NodeProfile>& pb;
    std::vector<int> order;    // a-node assignment order
    std::vector<int> map_ab;   // a -> b (-1 unassigned)
    std::vector<bool> used_b;

    bool consistent(int va, int vb) const {
        if (!(pa[va] == pb[vb])) return false;
        // Check adjacency against every already-assigned a-node.
        for (int ua = 0; ua < a.num_nodes(); ++ua) {
            int ub = map_ab[ua];
            if (ub < 0 || ua == va) continue;
            if (a.has_edge(va, ua) != b.has_edge(vb, ub)) return false;
            if (a.directed() && a.has_edge(ua, va) != b.has_edge(ub, vb)) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int va = order[depth];
        for (int vb = 0; vb < b.num_nodes(); ++vb) {
            if (used_b[vb] || !consistent(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = true;
            if (extend(depth + 1)) return true;
            map_ab[va] = -1;
            used_b[vb] = false;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const Graph& a, const Graph& b, int node_cap) {
    if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges() ||
        a.directed() != b.directed())
        return IsoResult::no;
    int n = a.num_nodes();
    if (n == 0) return IsoResult::yes;
    if (n > node_cap) return IsoResult::too_large;

    auto pa = profiles(a), pb = profiles(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return IsoResult::no;
    }

    // Assign rare-profile, high-degree nodes first.
    std::map<NodeProfile, int> freq;
    for (const auto& p : pa) ++freq[p];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int fx = freq[pa[x]], fy = freq[pa[y]];
        if (fx != fy) return fx < fy;
        int dx = a.degree(x), dy = a.degree(y);
        if (dx != dy) return dx > dy;
        return x < y;
    });

    Matcher m{a, b, pa, pb, std::move(order), std::vector<int>(n, -1),
              std::vector<bool>(n, false)};
    return m.extend(0) ? IsoResult::yes : IsoResult::no;
}

}  // namespace graphbench
