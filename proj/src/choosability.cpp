#include "ulcg/choosability.hpp"

#include <algorithm>
#include <numeric>

#include "ulcg/canonical.hpp"
#include "ulcg/graph6.hpp"

namespace ulcg {

std::optional<choosable_result> engine_cache::get_choosable(const std::string& key, int k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = choosable_.find({key, k});
    if (it == choosable_.end()) return std::nullopt;
    return it->second;
}

void engine_cache::put_choosable(const std::string& key, int k, const choosable_result& r) {
    std::lock_guard<std::mutex> lock(mu_);
    choosable_.emplace(std::make_pair(key, k), r);
}

std::optional<int> engine_cache::get_chi_list(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = chi_list_.find(key);
    if (it == chi_list_.end()) return std::nullopt;
    return it->second;
}

void engine_cache::put_chi_list(const std::string& key, int v) {
    std::lock_guard<std::mutex> lock(mu_);
    chi_list_.emplace(key, v);
}

std::optional<int> engine_cache::get_m_number(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = m_.find(key);
    if (it == m_.end()) return std::nullopt;
    return it->second;
}

void engine_cache::put_m_number(const std::string& key, int v) {
    std::lock_guard<std::mutex> lock(mu_);
    m_.emplace(key, v);
}

namespace {

constexpr int kMaxPalette = 62;

// Complete search for a bad k-assignment on one connected core component
// (minimum degree >= k). Assignments are enumerated in a canonical form:
// the first list is {0..k-1}, fresh colors are taken consecutively, and once
// a vertex and all its neighbors have lists, the vertex's list must be
// covered by its neighborhood lists (a bad assignment violating this can be
// rewritten into one satisfying it, so the restriction loses nothing on a
// connected graph). A branch whose assigned prefix is already uncolorable is
// completed with fresh disjoint lists and returned as a witness.
struct BadAssignmentSearch {
    const Graph& h;
    int k;
    std::uint64_t budget;
    std::uint64_t& nodes;

    std::vector<int> order;      // BFS from a max-degree vertex
    std::vector<std::uint64_t> pos_adj;  // adjacency between positions
    std::vector<std::vector<int>> close_at;  // positions whose closure completes at step i
    std::vector<std::uint64_t> lists;        // per position
    std::vector<int> prefix_color;

    BadAssignmentSearch(const Graph& h_, int k_, std::uint64_t budget_, std::uint64_t& nodes_)
        : h(h_), k(k_), budget(budget_), nodes(nodes_) {
        int root = 0;
        for (int v = 1; v < h.n; v++)
            if (h.degree(v) > h.degree(root)) root = v;
        std::vector<int> pos_of(h.n, -1);
        order.push_back(root);
        pos_of[root] = 0;
        for (size_t head = 0; head < order.size(); head++)
            for (int u : h.neighbors(order[head]))
                if (pos_of[u] == -1) {
                    pos_of[u] = static_cast<int>(order.size());
                    order.push_back(u);
                }
        pos_adj.assign(h.n, 0);
        for (int p = 0; p < h.n; p++)
            for (int u : h.neighbors(order[p])) pos_adj[p] |= std::uint64_t{1} << pos_of[u];
        close_at.assign(h.n, {});
        for (int p = 0; p < h.n; p++) {
            int close = p;
            for (std::uint64_t m = pos_adj[p]; m; m &= m - 1)
                close = std::max(close, __builtin_ctzll(m));
            close_at[close].push_back(p);
        }
        lists.assign(h.n, 0);
        prefix_color.assign(h.n, -1);
    }

    bool prefix_colorable(int upto) {
        // cap-1 existence check on positions 0..upto
        auto rec = [&](auto&& self, int p) -> bool {
            if (++nodes > budget) throw budget_exceeded(nodes);
            if (p > upto) return true;
            std::uint64_t avail = lists[p];
            for (std::uint64_t m = pos_adj[p] & ((std::uint64_t{1} << p) - 1); m; m &= m - 1)
                avail &= ~(std::uint64_t{1} << prefix_color[__builtin_ctzll(m)]);
            while (avail) {
                prefix_color[p] = __builtin_ctzll(avail);
                avail &= avail - 1;
                if (self(self, p + 1)) return true;
            }
            return false;
        };
        return rec(rec, 0);
    }

    bool closures_ok(int i) {
        for (int w : close_at[i]) {
            std::uint64_t union_nbr = 0;
            for (std::uint64_t m = pos_adj[w]; m; m &= m - 1)
                union_nbr |= lists[__builtin_ctzll(m)];
            if (lists[w] & ~union_nbr) return false;
        }
        return true;
    }

    // returns bad lists (per position) if found
    std::optional<std::vector<std::uint64_t>> search(int i, int used) {
        if (i == h.n) return std::nullopt;  // fully assigned and still colorable
        if (++nodes > budget) throw budget_exceeded(nodes);
        // candidates: j fresh colors (consecutive, ascending j) plus a
        // (k-j)-subset of the used colors, subsets in ascending mask order
        for (int j = 0; j <= k; j++) {
            if (j > 0 && used + j > kMaxPalette)
                throw budget_exceeded(nodes);  // palette infeasible at this size
            int old = k - j;
            if (old > used) continue;
            std::uint64_t fresh = ((std::uint64_t{1} << j) - 1) << used;
            std::uint64_t sub = (std::uint64_t{1} << old) - 1;  // Gosper over `used` bits
            while (true) {
                lists[i] = fresh | sub;
                if (closures_ok(i)) {
                    if (!prefix_colorable(i)) {
                        auto bad = lists;
                        int next = used + j;
                        for (int p = i + 1; p < h.n; p++) {
                            if (next + k > kMaxPalette) throw budget_exceeded(nodes);
                            bad[p] = ((std::uint64_t{1} << k) - 1) << next;
                            next += k;
                        }
                        return bad;
                    }
                    auto res = search(i + 1, used + j);
                    if (res) return res;
                }
                if (old == 0) break;
                std::uint64_t c = sub & -sub, r = sub + c;  // next subset of same size
                sub = (((r ^ sub) >> 2) / c) | r;
                if (sub >= (std::uint64_t{1} << used)) break;
            }
        }
        lists[i] = 0;
        return std::nullopt;
    }
};

ListAssignment masks_to_lists(const std::vector<std::uint64_t>& masks) {
    ListAssignment L(static_cast<int>(masks.size()));
    for (size_t v = 0; v < masks.size(); v++)
        for (std::uint64_t m = masks[v]; m; m &= m - 1) L.lists[v].push_back(__builtin_ctzll(m));
    return L;
}

// bad lists for component h in h-local labels, or nullopt when h is k-choosable
std::optional<ListAssignment> component_bad_assignment(const Graph& h, int k,
                                                       std::uint64_t budget, std::uint64_t& nodes,
                                                       engine_cache* cache) {
    bool exact = false;
    std::vector<int> perm;
    Graph hc = canonical_form(&h == nullptr ? h : h, &exact, &perm);
    std::string key;
    if (cache && exact) {
        key = graph6_encode(hc);
        if (auto hit = cache->get_choosable(key, k)) {
            if (hit->choosable) return std::nullopt;
            ListAssignment local(h.n);
            for (int v = 0; v < h.n; v++) local.lists[v] = hit->bad->lists[perm[v]];
            return local;
        }
    }
    const Graph& target = exact ? hc : h;
    choosable_result stored;
    std::optional<ListAssignment> canon_bad;
    if (!is_k_colorable(target, k)) {
        // chromatic shortcut: identical k-lists everywhere已 admit no coloring
        ListAssignment L(target.n);
        for (auto& l : L.lists)
            for (int c = 0; c < k; c++) l.push_back(c);
        canon_bad = L;
    } else {
        BadAssignmentSearch s(target, k, budget, nodes);
        auto bad = s.search(0, 0);
        if (bad) {
            // searcher works in BFS positions; map back to target labels
            ListAssignment L(target.n);
            for (int p = 0; p < target.n; p++)
                L.lists[s.order[p]] = masks_to_lists({(*bad)[p]}).lists[0];
            canon_bad = L;
        }
    }
    stored.choosable = !canon_bad.has_value();
    stored.bad = canon_bad;
    if (cache && exact) cache->put_choosable(key, k, stored);
    if (!canon_bad) return std::nullopt;
    if (!exact) return canon_bad;
    ListAssignment local(h.n);
    for (int v = 0; v < h.n; v++) local.lists[v] = canon_bad->lists[perm[v]];
    return local;
}

}  // namespace

choosable_result is_k_choosable(const Graph& g, int k, const search_options& opts,
                                engine_cache* cache) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    choosable_result out;

    // peel vertices with degree < k: those extend any coloring greedily
    std::uint64_t alive = g.n == 0 ? 0 : ((g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; v++)
            if (((alive >> v) & 1u) && __builtin_popcountll(g.adj[v] & alive) < k) {
                alive &= ~(std::uint64_t{1} << v);
                changed = true;
            }
    }
    std::vector<int> core_verts;
    for (int v = 0; v < g.n; v++)
        if ((alive >> v) & 1u) core_verts.push_back(v);
    if (core_verts.empty()) return out;

    Graph core_graph = induced_subgraph(g, core_verts);
    for (const auto& comp : components(core_graph)) {
        Graph h = induced_subgraph(core_graph, comp);
        auto bad = component_bad_assignment(h, k, opts.budget, out.nodes, cache);
        if (!bad) continue;
        // extend the component witness to all of g with uniform lists
        ListAssignment L(g.n);
        for (auto& l : L.lists)
            for (int c = 0; c < k; c++) l.push_back(c);
        for (size_t i = 0; i < comp.size(); i++) L.lists[core_verts[comp[i]]] = bad->lists[i];
        if (count_list_colorings(g, L, 1, search_options{opts.budget}).count != 0)
            throw std::logic_error("choosability witness failed verification");
        out.choosable = false;
        out.bad = std::move(L);
        return out;
    }
    return out;
}

int list_chromatic_number(const Graph& g, const search_options& opts, engine_cache* cache) {
    if (g.n == 0) return 0;
    std::string key;
    if (cache && g.n <= 8) {
        key = canonical_graph6(g);
        if (auto hit = cache->get_chi_list(key)) return *hit;
    }
    int result = 0;
    for (int k = 1; k <= g.n; k++) {
        if (is_k_choosable(g, k, opts, cache).choosable) {
            result = k;
            break;
        }
    }
    if (result == 0) throw std::logic_error("list chromatic number exceeded vertex count");
    // sanity: chi <= chi_l <= max degree + 1
    if (result < chromatic_number(g) || result > g.max_degree() + 1)
        throw std::logic_error("list chromatic number failed sanity bounds");
    if (cache && !key.empty()) cache->put_chi_list(key, result);
    return result;
}

}  // namespace ulcg
