#include "ulcg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "ulcg/graph6.hpp"

namespace ulcg {

namespace {

// upper-triangle bitstring under a relabeling p (p[i] = new label of vertex i)
std::uint64_t triangle_bits(const Graph& g, const std::vector<int>& p) {
    std::uint64_t bits = 0;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (g.has_edge(u, v)) {
                int a = std::min(p[u], p[v]), b = std::max(p[u], p[v]);
                bits |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
            }
    return bits;
}

Graph from_triangle_bits(int n, std::uint64_t bits) {
    Graph g(n);
    for (int b = 1; b < n; b++)
        for (int a = 0; a < b; a++)
            if ((bits >> (b * (b - 1) / 2 + a)) & 1u) g.add_edge(a, b);
    return g;
}

}  // namespace

Graph canonical_form(const Graph& g, bool* exact, std::vector<int>* perm) {
    if (g.n > 8) {
        if (exact) *exact = false;
        if (perm) {
            perm->resize(g.n);
            std::iota(perm->begin(), perm->end(), 0);
        }
        return g;
    }
    if (exact) *exact = true;
    std::vector<int> p(g.n), best_perm(g.n);
    std::iota(p.begin(), p.end(), 0);
    best_perm = p;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = triangle_bits(g, p);
        if (bits < best) {
            best = bits;
            best_perm = p;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    if (perm) *perm = best_perm;
    return from_triangle_bits(g.n, best);
}

std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g)); }

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_graphs supports 1 <= n <= 7");
    int nbits = n * (n - 1) / 2;
    std::vector<int> perm(n);

    // precompute bit relabeling tables for every permutation; transpositions
    // first so non-canonical masks are rejected after a few tables
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> bit_maps;
    auto add_map = [&](const std::vector<int>& p) {
        std::vector<int> map(nbits);
        for (int b = 1; b < n; b++)
            for (int a = 0; a < b; a++) {
                int x = std::min(p[a], p[b]), y = std::max(p[a], p[b]);
                map[b * (b - 1) / 2 + a] = y * (y - 1) / 2 + x;
            }
        bit_maps.push_back(std::move(map));
    };
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::swap(p[i], p[j]);
            add_map(p);
        }
    do {
        add_map(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); mask++) {
        bool canonical = true;
        for (const auto& map : bit_maps) {
            std::uint64_t img = 0;
            for (std::uint64_t m = mask; m; m &= m - 1)
                img |= std::uint64_t{1} << map[__builtin_ctzll(m)];
            if (img < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Graph g = from_triangle_bits(n, mask);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace ulcg
