#include "ulcg/lists.hpp"

#include <algorithm>

namespace ulcg {

void ListAssignment::normalize() {
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

std::vector<int> ListAssignment::palette() const {
    std::vector<int> out;
    for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_valid_list_coloring(const Graph& g, const ListAssignment& L, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n || L.size() != g.n) return false;
    for (int v = 0; v < g.n; v++) {
        if (!std::binary_search(L.lists[v].begin(), L.lists[v].end(), c.color[v])) return false;
        for (int u : g.neighbors(v))
            if (c.color[u] == c.color[v]) return false;
    }
    return true;
}

void require_covers(const Graph& g, const ListAssignment& L) {
    if (L.size() != g.n) throw std::invalid_argument("list assignment does not cover all vertices");
    for (int v = 0; v < g.n; v++)
        if (L.lists[v].empty())
            throw std::invalid_argument("empty list for vertex " + std::to_string(v));
}

}  // namespace ulcg
