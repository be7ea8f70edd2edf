#include "graphbench/ged.hpp"

#include <algorithm>
#include <vector>

namespace graphbench {

namespace {

// The smaller graph is padded with isolated dummy nodes to the larger size;
// cost of a bijection = node insertions + edge symmetric difference. Dummy
// nodes carry no edges, so edges incident to their images count as
// insertions through the symmetric difference automatically.
struct Search {
    const Graph& a;  // padded conceptually: indices >= a.num_nodes() are dummies
    const Graph& b;
    int total;       // = b.num_nodes() >= a.num_nodes()
    int best;
    std::vector<int> map_ab;
    std::vector<bool> used;

    bool a_edge(int u, int v) const {
        if (u >= a.num_nodes() || v >= a.num_nodes()) return false;
        return a.has_edge(u, v) || (!a.directed() && a.has_edge(v, u));
    }

    bool b_edge(int u, int v) const {
        return b.has_edge(u, v) || (!b.directed() && b.has_edge(v, u));
    }

    void dfs(int depth, int cost) {
        if (cost >= best) return;
        if (depth == total) {
            best = cost;
            return;
        }
        for (int vb = 0; vb < total; ++vb) {
            if (used[vb]) continue;
            int added = 0;
            for (int ua = 0; ua < depth; ++ua) {
                bool ea = a_edge(depth, ua);
                bool eb = b_edge(vb, map_ab[ua]);
                if (ea != eb) ++added;
                if (a.directed()) {
                    bool ra = ua < a.num_nodes() && depth < a.num_nodes() &&
                              a.has_edge(ua, depth);
                    bool rb = b.has_edge(map_ab[ua], vb);
                    if (ra != rb) ++added;
                }
            }
            map_ab[depth] = vb;
            used[vb] = true;
            dfs(depth + 1, cost + added);
            used[vb] = false;
            map_ab[depth] = -1;
        }
    }
};

}  // namespace

std::optional<int> ged_exact(const Graph& a_in, const Graph& b_in, int node_cap) {
    if (a_in.num_nodes() > node_cap || b_in.num_nodes() > node_cap) return std::nullopt;
    const Graph& a = a_in.num_nodes() <= b_in.num_nodes() ? a_in : b_in;
    const Graph& b = a_in.num_nodes() <= b_in.num_nodes() ? b_in : a_in;

    int node_ops = b.num_nodes() - a.num_nodes();
    int upper = node_ops + a.num_edges() + b.num_edges() + 1;  // delete all + insert all
    Search s{a, b, b.num_nodes(), upper, std::vector<int>(b.num_nodes(), -1),
             std::vector<bool>(b.num_nodes(), false)};
    s.dfs(0, 0);
    return node_ops + s.best;
}

}  // namespace graphbench
