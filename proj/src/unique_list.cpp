#include "ulcg/unique_list.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ulcg/canonical.hpp"
#include "ulcg/decompose.hpp"
#include "ulcg/graph6.hpp"

namespace ulcg {

namespace {

constexpr std::size_t kChunk = 128;

// reusable cap-2 list-coloring counter over palette masks
struct UniqueChecker {
    const Graph& g;
    std::vector<int> order;
    std::vector<int> color;

    explicit UniqueChecker(const Graph& g_) : g(g_), color(g_.n, -1) {
        order.resize(g.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    int count2(const std::vector<std::uint64_t>& masks, std::uint64_t& nodes,
               std::uint64_t budget) {
        int found = 0;
        auto rec = [&](auto&& self, size_t i) -> void {
            if (++nodes > budget) throw budget_exceeded(nodes);
            if (i == order.size()) {
                found++;
                return;
            }
            int v = order[i];
            std::uint64_t avail = masks[v];
            for (std::uint64_t m = g.adj[v]; m && avail; m &= m - 1) {
                int u = __builtin_ctzll(m);
                if (color[u] >= 0) avail &= ~(std::uint64_t{1} << color[u]);
            }
            while (avail && found < 2) {
                color[v] = __builtin_ctzll(avail);
                avail &= avail - 1;
                self(self, i + 1);
                color[v] = -1;
            }
        };
        rec(rec, 0);
        return found;
    }
};

struct TaskOut {
    bool skipped = false;
    bool found = false;
    bool exceeded = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> lists;  // witness masks when found
};

// Search candidate f-assignments for one target coloring: every non-chosen
// list color must appear on the vertex's neighborhood, so the candidates at v
// are {c(v)} union S with S an (f(v)-1)-subset of the neighborhood colors.
TaskOut run_task(const Graph& g, const std::vector<int>& f, const std::vector<int>& col,
                 std::uint64_t budget) {
    TaskOut out;
    int n = g.n;
    std::vector<std::uint64_t> cn(n, 0);
    for (int v = 0; v < n; v++)
        for (std::uint64_t m = g.adj[v]; m; m &= m - 1)
            cn[v] |= std::uint64_t{1} << col[__builtin_ctzll(m)];
    out.nodes = 1;
    for (int v = 0; v < n; v++)
        if (__builtin_popcountll(cn[v]) < f[v] - 1) return out;  // coloring pruned

    std::vector<std::vector<int>> cn_colors(n);
    for (int v = 0; v < n; v++)
        for (std::uint64_t m = cn[v]; m; m &= m - 1) cn_colors[v].push_back(__builtin_ctzll(m));

    std::vector<std::uint64_t> masks(n, 0);
    UniqueChecker checker(g);
    try {
        auto rec = [&](auto&& self, int v) -> bool {
            if (++out.nodes > budget) throw budget_exceeded(out.nodes);
            if (v == n) {
                return checker.count2(masks, out.nodes, budget) == 1;
            }
            int pick = f[v] - 1;
            int avail = static_cast<int>(cn_colors[v].size());
            std::uint64_t base = std::uint64_t{1} << col[v];
            if (pick == 0) {
                masks[v] = base;
                return self(self, v + 1);
            }
            // Gosper over compressed neighborhood-color indices, ascending
            std::uint64_t sub = (std::uint64_t{1} << pick) - 1;
            while (sub < (std::uint64_t{1} << avail)) {
                std::uint64_t expanded = 0;
                for (std::uint64_t s = sub; s; s &= s - 1)
                    expanded |= std::uint64_t{1} << cn_colors[v][__builtin_ctzll(s)];
                masks[v] = base | expanded;
                if (self(self, v + 1)) return true;
                std::uint64_t c = sub & -sub, r = sub + c;
                sub = (((r ^ sub) >> 2) / c) | r;
            }
            return false;
        };
        out.found = rec(rec, 0);
        if (out.found) out.lists = masks;
    } catch (const budget_exceeded& e) {
        out.exceeded = true;
        out.nodes = e.nodes;
    }
    return out;
}

// Lemma checks every returned witness must satisfy; a violation means an
// engine bug, never a caller error.
void assert_witness(const Graph& g, const std::vector<int>& f, bool uniform_k,
                    const ListAssignment& L, const Coloring& c) {
    search_options verify_opts;
    auto res = count_list_colorings(g, L, 2, verify_opts);
    if (res.count != 1 || !is_valid_list_coloring(g, L, c))
        throw std::logic_error("witness failed uniqueness re-verification");
    int n = g.n;
    long long sum_f = 0;
    for (int v = 0; v < n; v++) {
        if (static_cast<int>(L.lists[v].size()) != f[v])
            throw std::logic_error("witness list size mismatch");
        sum_f += f[v];
        std::uint64_t cn = 0;
        for (int u : g.neighbors(v)) cn |= std::uint64_t{1} << c.color[u];
        for (int x : L.lists[v])
            if (x != c.color[v] && !((cn >> x) & 1u))
                throw std::logic_error("witness violates the neighborhood color condition");
    }
    if (sum_f > n + static_cast<long long>(g.edge_count()))
        throw std::logic_error("witness violates the list-size sum bound");
    if (uniform_k) {
        int k = f.empty() ? 0 : f[0];
        std::vector<char> qualifying(n, 0);
        int t = 0;
        for (int v = 0; v < n; v++) t = std::max(t, c.color[v] + 1);
        std::vector<char> class_ok(t, 0);
        for (int v = 0; v < n; v++) {
            std::uint64_t cn = 0;
            for (int u : g.neighbors(v)) cn |= std::uint64_t{1} << c.color[u];
            if (__builtin_popcountll(cn) >= k) class_ok[c.color[v]] = 1;
        }
        int good = std::count(class_ok.begin(), class_ok.end(), 1);
        if (good < k - 1)
            throw std::logic_error("witness violates the k-1 rich-class lemma");
    }
}

WitnessReport search_connected(const Graph& g, const std::vector<int>& f,
                               const search_options& opts) {
    WitnessReport rep;
    rep.f = f;
    int n = g.n;
    int maxf = *std::max_element(f.begin(), f.end());

    struct Pending {
        std::vector<int> col;
    };
    std::vector<Pending> chunk;
    std::vector<TaskOut> outs;
    bool done = false;

    auto flush = [&]() {
        if (chunk.empty() || done) {
            chunk.clear();
            return;
        }
        outs.assign(chunk.size(), {});
        std::atomic<long> stop_idx{static_cast<long>(chunk.size())};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (long i = 0; i < static_cast<long>(chunk.size()); i++) {
            if (i > stop_idx.load(std::memory_order_relaxed)) {
                outs[i].skipped = true;
                continue;
            }
            outs[i] = run_task(g, f, chunk[i].col, opts.budget);
            if (outs[i].found || outs[i].exceeded) {
                long prev = stop_idx.load(std::memory_order_relaxed);
                while (prev > i && !stop_idx.compare_exchange_weak(prev, i)) {
                }
            }
        }
        // deterministic reduction: walk tasks in canonical order
        for (size_t i = 0; i < chunk.size(); i++) {
            rep.colorings_considered++;
            if (outs[i].exceeded) {
                rep.nodes += outs[i].nodes;
                rep.decided = false;
                done = true;
                return;
            }
            rep.nodes += outs[i].nodes;
            if (rep.nodes > opts.budget) {
                rep.decided = false;
                done = true;
                return;
            }
            if (outs[i].found) {
                ListAssignment L(n);
                for (int v = 0; v < n; v++)
                    for (std::uint64_t m = outs[i].lists[v]; m; m &= m - 1)
                        L.lists[v].push_back(__builtin_ctzll(m));
                rep.witness = {L, Coloring{chunk[i].col}};
                rep.decided = true;
                done = true;
                return;
            }
        }
        chunk.clear();
    };

    if (maxf <= n) {
        enumerate_proper_partitions(g, maxf, n, [&](const std::vector<int>& col, int) {
            chunk.push_back({col});
            if (chunk.size() >= kChunk) {
                flush();
                return !done;
            }
            return true;
        });
        flush();
    }
    if (!done) rep.decided = true;  // exhausted every target coloring
    return rep;
}

}  // namespace

WitnessReport is_uflc(const Graph& g, const std::vector<int>& f, const search_options& opts) {
    if (static_cast<int>(f.size()) != g.n)
        throw std::invalid_argument("size function must cover all vertices");
    for (int v = 0; v < g.n; v++)
        if (f[v] < 1) throw std::invalid_argument("list sizes must be positive");
    if (g.n == 0) throw std::invalid_argument("empty graph");

    WitnessReport rep;
    rep.f = f;
    bool uniform = std::all_of(f.begin(), f.end(), [&](int x) { return x == f[0]; });
    if (uniform) rep.k = f[0];

    // a graph is uniquely f-list colorable iff each component is (the coloring
    // count over the whole graph is the product over its components)
    auto comps = components(g);
    ListAssignment combined(g.n);
    Coloring coloring{std::vector<int>(g.n, -1)};
    bool any_false = false;
    for (const auto& comp : comps) {
        Graph h = induced_subgraph(g, comp);
        std::vector<int> fh(comp.size());
        for (size_t i = 0; i < comp.size(); i++) fh[i] = f[comp[i]];
        WitnessReport sub = search_connected(h, fh, opts);
        rep.nodes += sub.nodes;
        rep.colorings_considered += sub.colorings_considered;
        if (!sub.decided) {
            rep.decided = false;
            return rep;
        }
        if (!sub.witness) {
            any_false = true;
            break;
        }
        for (size_t i = 0; i < comp.size(); i++) {
            combined.lists[comp[i]] = sub.witness->first.lists[i];
            coloring.color[comp[i]] = sub.witness->second.color[i];
        }
    }
    rep.decided = true;
    if (!any_false) {
        assert_witness(g, f, uniform, combined, coloring);
        rep.witness = {combined, coloring};
    }
    return rep;
}

WitnessReport is_uklc(const Graph& g, int k, const search_options& opts) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    WitnessReport rep = is_uflc(g, std::vector<int>(g.n, k), opts);
    rep.k = k;
    return rep;
}

MNumberResult m_number(const Graph& g, const search_options& opts, engine_cache* cache) {
    if (g.n == 0) throw std::invalid_argument("empty graph");
    MNumberResult out;
    out.ceiling = g.edge_count() / g.n + 2;  // floor(average degree / 2) + 2

    std::string key;
    if (cache) {
        key = canonical_graph6(g);
        if (auto hit = cache->get_m_number(key)) {
            // recompute witnesses only when a caller needs them; cached m is enough here
            out.m = *hit;
            return out;
        }
    }
    for (int k = 2; k <= out.ceiling; k++) {
        WitnessReport rep = is_uklc(g, k, opts);
        if (!rep.decided) throw m_number_undecided(k, out);
        if (!rep.witness) {
            out.m = k;
            if (cache) cache->put_m_number(key, k);
            return out;
        }
        out.witnesses.emplace_back(k, *rep.witness);
    }
    throw std::logic_error("m-number exceeded the average-degree ceiling");
}

int edge_m_number(const Graph& g, const search_options& opts, engine_cache* cache) {
    if (g.edge_count() == 0) throw std::invalid_argument("edge m-number needs at least one edge");
    Graph lg = line_graph(g);
    int m = m_number(lg, opts, cache).m;
    int bound = g.max_degree() + 1;
    if (m > bound) throw std::logic_error("edge m-number exceeded max degree + 1");
    if (m == bound) {
        int d = g.degree(0);
        for (int v = 1; v < g.n; v++)
            if (g.degree(v) != d) throw std::logic_error("edge m-number bound tight on an irregular graph");
    }
    return m;
}

}  // namespace ulcg
