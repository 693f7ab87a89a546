#include "ulcg/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace ulcg {

ListAssignment lemma1_assignment(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    auto unique = is_uniquely_k_colorable(g, k + 1);
    if (!unique)
        throw construction_error("graph is not uniquely " + std::to_string(k + 1) + "-colorable");

    std::vector<std::vector<int>> classes(k + 1);
    for (int v = 0; v < g.n; v++) classes[unique->color[v]].push_back(v);
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (int i = 0; i <= k; i++)
        if (static_cast<int>(classes[i].size()) < i)
            throw construction_error("class " + std::to_string(i + 1) + " has " +
                                     std::to_string(classes[i].size()) + " vertices, needs at least " +
                                     std::to_string(i));

    // Unrolled induction: the class removed at level i >= 2 receives
    // {i+1} plus all of {1..i} except one rotating color; every survivor of a
    // level gets that level's new color appended. Classes 1 and 2 are the
    // base case's singleton lists.
    ListAssignment L(g.n);
    for (int i = 0; i <= k; i++) {
        for (size_t j = 0; j < classes[i].size(); j++) {
            int v = classes[i][j];
            auto& list = L.lists[v];
            if (i <= 1) {
                list.push_back(i + 1);
            } else {
                int drop = static_cast<int>(j % i) + 1;
                for (int c = 1; c <= i + 1; c++)
                    if (c != drop) list.push_back(c);
            }
            for (int c = i + 2; c <= k + 1; c++) list.push_back(c);
        }
    }

    auto got = unique_list_coloring(g, L);
    if (!got) throw std::logic_error("lemma construction did not yield a unique coloring");
    for (int v = 0; v < g.n; v++)
        if (static_cast<int>(L.lists[v].size()) != k)
            throw std::logic_error("lemma construction produced a wrong list size");
    if (static_cast<int>(L.palette().size()) != k + 1)
        throw std::logic_error("lemma construction did not use exactly k+1 colors");
    return L;
}

std::pair<std::vector<int>, ListAssignment> equality_flist(const Graph& g,
                                                           const std::vector<int>& order) {
    if (g.n == 0) throw std::invalid_argument("empty graph");
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n || seen[v]) throw std::invalid_argument("order must enumerate all vertices once");
        seen[v] = 1;
    }
    if (static_cast<int>(order.size()) != g.n)
        throw std::invalid_argument("order must enumerate all vertices once");

    ListAssignment L(g.n);
    std::vector<char> placed(g.n, 0);
    for (int step = 0; step < g.n; step++) {
        int v = order[step];
        L.lists[v].push_back(step);  // fresh color per step
        for (int u : g.neighbors(v))
            if (placed[u]) L.lists[u].push_back(step);
        placed[v] = 1;
    }
    std::vector<int> f(g.n);
    long long total = 0;
    for (int v = 0; v < g.n; v++) {
        std::sort(L.lists[v].begin(), L.lists[v].end());
        f[v] = static_cast<int>(L.lists[v].size());
        total += f[v];
    }
    if (total != g.n + static_cast<long long>(g.edge_count()))
        throw std::logic_error("equality construction missed the size target");
    if (!unique_list_coloring(g, L))
        throw std::logic_error("equality construction did not yield a unique coloring");
    return {f, L};
}

std::pair<std::vector<int>, ListAssignment> equality_flist(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return equality_flist(g, order);
}

Graph gstar(const Graph& g, const ListAssignment& L, int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    require_covers(g, L);
    for (int v = 0; v < g.n; v++)
        for (int c : L.lists[v])
            if (c < 1 || c > t)
                throw std::invalid_argument("list color " + std::to_string(c) +
                                            " outside the palette 1.." + std::to_string(t));
    Graph out(g.n + t);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int i = 0; i < t; i++)
        for (int j = i + 1; j < t; j++) out.add_edge(g.n + i, g.n + j);
    for (int v = 0; v < g.n; v++)
        for (int c = 1; c <= t; c++)
            if (!std::binary_search(L.lists[v].begin(), L.lists[v].end(), c))
                out.add_edge(v, g.n + c - 1);
    return out;
}

Graph duplicate_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    Graph out(g.n + 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int u : g.neighbors(v)) out.add_edge(g.n, u);
    return out;
}

}  // namespace ulcg
