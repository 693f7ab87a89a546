#include "ulcg/reference.hpp"

#include <algorithm>

namespace ulcg {
namespace reference {

std::uint64_t count_list_colorings(const Graph& g, const ListAssignment& L, std::uint64_t cap) {
    std::vector<int> color(g.n, -1);
    std::uint64_t found = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (found >= cap) return;
        if (v == g.n) {
            found++;
            return;
        }
        for (int c : L.lists[v]) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            self(self, v + 1);
            color[v] = -1;
        }
    };
    rec(rec, 0);
    return std::min(found, cap);
}

namespace {

// all k-subsets of {0..palette-1}
std::vector<std::vector<int>> k_subsets(int palette, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c < palette; c++) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

template <typename Fn>
bool any_assignment(const Graph& g, int k, Fn&& predicate) {
    int palette = g.n * k;
    auto subsets = k_subsets(palette, k);
    ListAssignment L(g.n);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n) return predicate(L);
        for (const auto& s : subsets) {
            L.lists[v] = s;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

bool is_k_choosable(const Graph& g, int k) {
    return !any_assignment(g, k, [&](const ListAssignment& L) {
        return count_list_colorings(g, L, 1) == 0;
    });
}

bool is_uklc(const Graph& g, int k) {
    return any_assignment(g, k, [&](const ListAssignment& L) {
        return count_list_colorings(g, L, 2) == 1;
    });
}

}  // namespace reference
}  // namespace ulcg
