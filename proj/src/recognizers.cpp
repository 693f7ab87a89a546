#include "ulcg/recognizers.hpp"

#include <algorithm>

namespace ulcg {

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) != 2) return false;
    return true;
}

// vertices of a cycle graph in traversal order
std::vector<int> cycle_order(const Graph& g) {
    std::vector<int> out{0};
    int prev = -1, cur = 0;
    do {
        int next = -1;
        for (int u : g.neighbors(cur))
            if (u != prev) {
                next = u;
                break;
            }
        prev = cur;
        cur = next;
        if (cur != 0) out.push_back(cur);
    } while (cur != 0);
    return out;
}

}  // namespace

std::optional<std::vector<int>> recognize_theta(const Graph& g) {
    if (!is_connected(g) || g.n < 4) return std::nullopt;
    std::vector<int> poles;
    for (int v = 0; v < g.n; v++) {
        int d = g.degree(v);
        if (d >= 3)
            poles.push_back(v);
        else if (d != 2)
            return std::nullopt;
    }
    if (poles.size() != 2) return std::nullopt;
    int p = poles[0], q = poles[1];
    if (g.degree(p) != g.degree(q)) return std::nullopt;

    std::vector<char> used(g.n, 0);
    used[p] = used[q] = 1;
    std::vector<int> lengths;
    for (int start : g.neighbors(p)) {
        if (start == q) {
            lengths.push_back(1);
            continue;
        }
        if (used[start]) return std::nullopt;
        int prev = p, cur = start, len = 1;
        while (cur != q) {
            if (g.degree(cur) != 2 || used[cur]) return std::nullopt;
            used[cur] = 1;
            int next = -1;
            for (int u : g.neighbors(cur))
                if (u != prev) next = u;
            if (next == p) return std::nullopt;  // loop back to the same pole
            prev = cur;
            cur = next;
            len++;
        }
        lengths.push_back(len);
    }
    for (int v = 0; v < g.n; v++)
        if (!used[v]) return std::nullopt;
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

bool is_2_choosable_fast(const Graph& g) {
    for (const auto& comp : components(g)) {
        Graph h = induced_subgraph(g, comp);
        Graph c = core(h);
        if (c.n == 1) continue;
        if (is_cycle_graph(c) && c.n % 2 == 0) continue;
        auto theta = recognize_theta(c);
        if (theta && theta->size() == 3 && (*theta)[0] == 2 && (*theta)[1] == 2 &&
            (*theta)[2] % 2 == 0)
            continue;
        return false;
    }
    return true;
}

bool is_u2lc_fast(const Graph& g) {
    for (const auto& b : blocks(g).blocks)
        if (classify_block(b.graph) == BlockClass::other) return true;
    return false;
}

std::string critical_family_name(CriticalFamily f) {
    switch (f) {
        case CriticalFamily::odd_cycle: return "odd_cycle";
        case CriticalFamily::two_even_cycles_path: return "two_even_cycles_path";
        case CriticalFamily::theta_same_parity: return "theta_same_parity";
        case CriticalFamily::theta_2_2_2_2r: return "theta_2_2_2_2r";
        default: return "none";
    }
}

CriticalityVerdict is_3_list_critical_fast(const Graph& g) {
    CriticalityVerdict out;
    if (g.n == 0 || !is_connected(g)) return out;

    if (is_cycle_graph(g) && g.n % 2 == 1) {
        out.is_critical = true;
        out.family = CriticalFamily::odd_cycle;
        out.certificate = {cycle_order(g)};
        return out;
    }

    if (auto theta = recognize_theta(g)) {
        const auto& len = *theta;
        if (len.size() == 3) {
            bool same_parity = (len[0] % 2 == len[1] % 2) && (len[1] % 2 == len[2] % 2);
            int twos = static_cast<int>(std::count(len.begin(), len.end(), 2));
            if (same_parity && twos <= 1) {
                out.is_critical = true;
                out.family = CriticalFamily::theta_same_parity;
                out.certificate = {len};
                return out;
            }
        }
        if (len.size() == 4 && len[0] == 2 && len[1] == 2 && len[2] == 2 && len[3] % 2 == 0) {
            out.is_critical = true;
            out.family = CriticalFamily::theta_2_2_2_2r;
            out.certificate = {len};
            return out;
        }
        return out;
    }

    // two even cycles joined by a path, possibly of length zero: exactly two
    // even cycle blocks, every other block a bridge, and degrees 2 everywhere
    // except two junctions of degree 3 (or one of degree 4 for a shared
    // cut vertex) -- that shape admits no stray pendant edges
    auto dec = blocks(g);
    std::vector<const Block*> cycles;
    for (const auto& b : dec.blocks) {
        BlockClass cls = classify_block(b.graph);
        if (cls == BlockClass::cycle)
            cycles.push_back(&b);
        else if (b.graph.n != 2)
            return out;  // some block is neither a cycle nor a bridge
    }
    if (cycles.size() != 2) return out;
    for (const Block* b : cycles)
        if (b->graph.n % 2 != 0) return out;
    int deg2 = 0, deg3 = 0, deg4 = 0;
    for (int v = 0; v < g.n; v++) {
        int d = g.degree(v);
        if (d == 2) deg2++;
        else if (d == 3) deg3++;
        else if (d == 4) deg4++;
        else return out;
    }
    bool shared_vertex = (deg4 == 1 && deg3 == 0 && deg2 == g.n - 1);
    bool joined_by_path = (deg4 == 0 && deg3 == 2 && deg2 == g.n - 2);
    if (shared_vertex || joined_by_path) {
        out.is_critical = true;
        out.family = CriticalFamily::two_even_cycles_path;
        out.certificate = {cycles[0]->vertices, cycles[1]->vertices};
    }
    return out;
}

bool is_list_critical_bruteforce(const Graph& g, const search_options& opts, engine_cache* cache) {
    if (g.n == 0 || g.edge_count() == 0) return false;
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) == 0) return false;  // removing it keeps chi_l unchanged
    int chi = list_chromatic_number(g, opts, cache);
    for (auto [u, v] : g.edges())
        if (list_chromatic_number(remove_edge_copy(g, u, v), opts, cache) >= chi) return false;
    return true;
}

bool is_edge_list_critical(const Graph& g, const search_options& opts, engine_cache* cache) {
    if (g.n == 0 || g.edge_count() == 0) return false;
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) == 0) return false;
    int chi = list_chromatic_number(line_graph(g), opts, cache);
    for (auto [u, v] : g.edges())
        if (list_chromatic_number(line_graph(remove_edge_copy(g, u, v)), opts, cache) >= chi)
            return false;
    return true;
}

bool is_star(const Graph& g) {
    if (g.n < 2 || !is_connected(g)) return false;
    int centers = 0, leaves = 0;
    for (int v = 0; v < g.n; v++) {
        if (g.degree(v) == g.n - 1) centers++;
        else if (g.degree(v) == 1) leaves++;
    }
    // K2 counts both vertices as centers
    return centers + leaves == g.n && (centers == 1 || (g.n == 2 && centers == 2));
}

}  // namespace ulcg
