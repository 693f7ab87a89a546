#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ulcg {

// Largest vertex count we support; matches the single-byte graph6 size form.
constexpr int kMaxVertices = 62;

// Simple undirected graph on vertices 0..n-1 with bitmask adjacency rows.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, 0) {
        if (n_ < 0 || n_ > kMaxVertices)
            throw std::invalid_argument("vertex count out of range: " + std::to_string(n_));
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        adj[u] &= ~(std::uint64_t{1} << v);
        adj[v] &= ~(std::uint64_t{1} << u);
    }

    int degree(int v) const { return __builtin_popcountll(adj[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; v++) total += degree(v);
        return total / 2;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; v++) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        int d = n == 0 ? 0 : degree(0);
        for (int v = 1; v < n; v++) d = std::min(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (std::uint64_t m = adj[v]; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
        return out;
    }

    bool operator==(const Graph&) const = default;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Descending degree sequence.
std::vector<int> degree_sequence(const Graph& g);

// Subgraph induced on `verts` (need not be sorted); vertex i of the result is verts[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph remove_vertex_copy(const Graph& g, int v);
Graph remove_edge_copy(const Graph& g, int u, int v);

}  // namespace ulcg
