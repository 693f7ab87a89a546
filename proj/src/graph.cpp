#include "ulcg/graph.hpp"

#include <algorithm>

namespace ulcg {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.n; s++) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= g.adj[__builtin_ctzll(m)];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<int> verts;
        for (std::uint64_t m = comp; m; m &= m - 1) verts.push_back(__builtin_ctzll(m));
        out.push_back(std::move(verts));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.n, -1);
    for (int s = 0; s < g.n; s++) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (std::uint64_t m = g.adj[u]; m; m &= m - 1) {
                int v = __builtin_ctzll(m);
                if (side[v] == -1) {
                    side[v] = side[u] ^ 1;
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; v++) d[v] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); i++)
        for (size_t j = i + 1; j < verts.size(); j++)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph remove_vertex_copy(const Graph& g, int v) {
    std::vector<int> verts;
    for (int u = 0; u < g.n; u++)
        if (u != v) verts.push_back(u);
    return induced_subgraph(g, verts);
}

Graph remove_edge_copy(const Graph& g, int u, int v) {
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

}  // namespace ulcg
