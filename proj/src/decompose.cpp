#include "ulcg/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ulcg {

Graph core(const Graph& g, std::vector<int>* kept) {
    std::uint64_t alive = (g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1);
    auto live_degree = [&](int v) { return __builtin_popcountll(g.adj[v] & alive); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; v++) {
            if (((alive >> v) & 1u) && live_degree(v) == 1) {
                alive &= ~(std::uint64_t{1} << v);
                changed = true;
                break;
            }
        }
    }
    std::vector<int> verts;
    for (int v = 0; v < g.n; v++)
        if ((alive >> v) & 1u) verts.push_back(v);
    if (kept) *kept = verts;
    return induced_subgraph(g, verts);
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    std::vector<bool> is_cut;
    int counter = 0;

    explicit BlockFinder(const Graph& g_)
        : g(g_), num(g_.n, -1), low(g_.n, 0), is_cut(g_.n, false) {}

    void pop_block(std::pair<int, int> until) {
        std::vector<std::pair<int, int>> edges;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(e);
            if (e == until) break;
        }
        block_edges.push_back(std::move(edges));
    }

    void dfs(int u, int parent) {
        num[u] = low[u] = counter++;
        int children = 0;
        for (std::uint64_t m = g.adj[u]; m; m &= m - 1) {
            int v = __builtin_ctzll(m);
            if (v == parent) continue;
            if (num[v] == -1) {
                children++;
                edge_stack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    if (parent != -1 || children > 1) is_cut[u] = true;
                    pop_block({u, v});
                }
            } else if (num[v] < num[u]) {
                edge_stack.push_back({u, v});
                low[u] = std::min(low[u], num[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder bf(g);
    BlockDecomposition out;
    for (int s = 0; s < g.n; s++) {
        if (bf.num[s] != -1) continue;
        bf.dfs(s, -1);
        if (g.degree(s) == 0) {
            Block b;
            b.vertices = {s};
            b.graph = Graph(1);
            out.blocks.push_back(std::move(b));
        }
    }
    for (auto& edges : bf.block_edges) {
        Block b;
        for (auto [u, v] : edges) {
            b.vertices.push_back(u);
            b.vertices.push_back(v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        b.graph = Graph(static_cast<int>(b.vertices.size()));
        auto local = [&](int v) {
            return int(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) -
                       b.vertices.begin());
        };
        for (auto [u, v] : edges) b.graph.add_edge(local(u), local(v));
        out.blocks.push_back(std::move(b));
    }
    for (int v = 0; v < g.n; v++)
        if (bf.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

BlockClass classify_block(const Graph& b) {
    if (b.n >= 3 && is_connected(b)) {
        bool two_regular = true;
        for (int v = 0; v < b.n; v++)
            if (b.degree(v) != 2) two_regular = false;
        if (two_regular) return BlockClass::cycle;
    }
    if (b.edge_count() == b.n * (b.n - 1) / 2) return BlockClass::complete;
    if (is_bipartite(b) && b.n >= 2) {
        // complete bipartite: 2-color one side, check all cross pairs present
        std::vector<int> side(b.n, -1);
        side[0] = 0;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : b.neighbors(u))
                if (side[v] == -1) {
                    side[v] = side[u] ^ 1;
                    stack.push_back(v);
                }
        }
        bool complete_cross = is_connected(b);
        for (int u = 0; u < b.n && complete_cross; u++)
            for (int v = u + 1; v < b.n && complete_cross; v++)
                if (side[u] != side[v] && !b.has_edge(u, v)) complete_cross = false;
        if (complete_cross) return BlockClass::complete_bipartite;
    }
    return BlockClass::other;
}

std::string block_class_name(BlockClass c) {
    switch (c) {
        case BlockClass::cycle: return "cycle";
        case BlockClass::complete: return "complete";
        case BlockClass::complete_bipartite: return "complete_bipartite";
        default: return "other";
    }
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    Graph lg(static_cast<int>(es.size()));
    for (size_t i = 0; i < es.size(); i++)
        for (size_t j = i + 1; j < es.size(); j++) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                lg.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return lg;
}

bool contains_k4(const Graph& g) {
    for (int a = 0; a < g.n; a++) {
        if (g.degree(a) < 3) continue;
        for (int b = a + 1; b < g.n; b++) {
            if (!g.has_edge(a, b)) continue;
            std::uint64_t common_ab = g.adj[a] & g.adj[b];
            for (std::uint64_t m = common_ab; m; m &= m - 1) {
                int c = __builtin_ctzll(m);
                if (c <= b) continue;
                std::uint64_t above_c = c + 1 >= 64 ? 0 : ~((std::uint64_t{2} << c) - 1);
                if (common_ab & g.adj[c] & above_c) return true;
            }
        }
    }
    return false;
}

}  // namespace ulcg
