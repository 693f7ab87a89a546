#include "ulcg/engine.hpp"

#include <algorithm>
#include <numeric>

namespace ulcg {

namespace {

struct CountCtx {
    const Graph& g;
    const std::vector<std::uint64_t>& masks;  // list of vertex v as palette bitmask
    const std::vector<int>& order;
    std::uint64_t cap;
    std::uint64_t budget;
    std::vector<int> color;  // palette index or -1
    std::uint64_t found = 0;
    std::uint64_t nodes = 0;
    std::vector<int> first;

    void rec(size_t i) {
        if (++nodes > budget) throw budget_exceeded(nodes);
        if (i == order.size()) {
            if (found++ == 0) first = color;
            return;
        }
        int v = order[i];
        std::uint64_t avail = masks[v];
        for (std::uint64_t m = g.adj[v]; m && avail; m &= m - 1) {
            int u = __builtin_ctzll(m);
            if (color[u] >= 0) avail &= ~(std::uint64_t{1} << color[u]);
        }
        while (avail) {
            int c = __builtin_ctzll(avail);
            avail &= avail - 1;
            color[v] = c;
            rec(i + 1);
            color[v] = -1;
            if (found >= cap) return;
        }
    }
};

}  // namespace

namespace detail {

// Shared fast path: lists already as bitmasks over a palette of <= 64 colors.
count_result count_mask_colorings(const Graph& g, const std::vector<std::uint64_t>& masks,
                                  std::uint64_t cap, std::uint64_t budget) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    CountCtx ctx{g, masks, order, cap, budget};
    ctx.color.assign(g.n, -1);
    ctx.rec(0);
    count_result out;
    out.count = std::min<std::uint64_t>(ctx.found, cap);
    out.nodes = ctx.nodes;
    if (ctx.found > 0) out.first = Coloring{ctx.first};
    return out;
}

}  // namespace detail

count_result count_list_colorings(const Graph& g, const ListAssignment& L, std::uint64_t cap,
                                  const search_options& opts) {
    require_covers(g, L);
    auto palette = L.palette();
    if (palette.size() > 64)
        throw std::invalid_argument("palette too large: engines support at most 64 colors");
    std::vector<std::uint64_t> masks(g.n, 0);
    for (int v = 0; v < g.n; v++)
        for (int c : L.lists[v]) {
            auto it = std::lower_bound(palette.begin(), palette.end(), c);
            masks[v] |= std::uint64_t{1} << (it - palette.begin());
        }
    count_result res = detail::count_mask_colorings(g, masks, cap, opts.budget);
    if (res.first) {
        for (int& c : res.first->color) c = palette[c];
    }
    return res;
}

std::optional<Coloring> unique_list_coloring(const Graph& g, const ListAssignment& L,
                                             const search_options& opts) {
    auto res = count_list_colorings(g, L, 2, opts);
    if (res.count == 1) return res.first;
    return std::nullopt;
}

void enumerate_proper_partitions(const Graph& g, int min_classes, int max_classes,
                                 const std::function<bool(const std::vector<int>&, int)>& fn) {
    if (g.n == 0) return;
    max_classes = std::min(max_classes, g.n);
    std::vector<int> col(g.n, -1);
    // restricted growth: vertex i may open class `used` or join an earlier one
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (i == g.n) {
            if (used >= min_classes) return fn(col, used);
            return true;
        }
        int limit = std::min(used + 1, max_classes);
        for (int c = 0; c < limit; c++) {
            bool ok = true;
            for (std::uint64_t m = g.adj[i] & ((std::uint64_t{1} << i) - 1); m; m &= m - 1)
                if (col[__builtin_ctzll(m)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[i] = c;
            if (!self(self, i + 1, std::max(used, c + 1))) return false;
            col[i] = -1;
        }
        return true;
    };
    rec(rec, 0, 0);
}

bool is_k_colorable(const Graph& g, int k) {
    if (g.n == 0) return true;
    if (k <= 0) return false;
    bool found = false;
    enumerate_proper_partitions(g, 1, k, [&](const std::vector<int>&, int) {
        found = true;
        return false;
    });
    return found;
}

int chromatic_number(const Graph& g) {
    if (g.n == 0) return 0;
    for (int k = 1;; k++)
        if (is_k_colorable(g, k)) return k;
}

std::optional<Coloring> is_uniquely_k_colorable(const Graph& g, int k) {
    if (k < 1 || g.n == 0) return std::nullopt;
    std::vector<int> the_coloring;
    int the_classes = 0, count = 0;
    enumerate_proper_partitions(g, 1, k, [&](const std::vector<int>& col, int t) {
        if (++count == 1) {
            the_coloring = col;
            the_classes = t;
        }
        return count < 2;
    });
    if (count == 1 && the_classes == k) return Coloring{the_coloring};
    return std::nullopt;
}

}  // namespace ulcg
