#include "ulcg/families.hpp"

#include <algorithm>

namespace ulcg {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw invalid_family("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; i++)
        for (int j = 0; j < b; j++) g.add_edge(i, a + j);
    return g;
}

Graph theta_graph(const std::vector<int>& lengths) {
    if (lengths.size() < 2) throw invalid_family("theta needs at least 2 path lengths");
    int ones = 0, interior = 0;
    for (int len : lengths) {
        if (len < 1) throw invalid_family("theta path lengths must be positive");
        if (len == 1) ones++;
        interior += len - 1;
    }
    if (ones > 1) throw invalid_family("theta with two length-1 paths is a multigraph");
    Graph g(2 + interior);
    int next = 2;
    for (int len : lengths) {
        int prev = 0;
        for (int step = 1; step < len; step++) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

Graph join_graphs(const Graph& g, const Graph& h) {
    Graph out(g.n + h.n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n + u, g.n + v);
    for (int u = 0; u < g.n; u++)
        for (int v = 0; v < h.n; v++) out.add_edge(u, g.n + v);
    return out;
}

Graph figure1() { return join_graphs(complete_graph(2), path_graph(5)); }

Graph figure2() {
    Graph g(7);
    int cyc1[] = {0, 1, 2, 3}, cyc2[] = {0, 4, 5, 6};
    for (int i = 0; i < 4; i++) {
        g.add_edge(cyc1[i], cyc1[(i + 1) % 4]);
        g.add_edge(cyc2[i], cyc2[(i + 1) % 4]);
    }
    return g;
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

// splits "a,b" at the top-level comma (ignoring commas inside parentheses)
std::pair<std::string, std::string> split_join_args(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '(') depth++;
        else if (s[i] == ')') depth--;
        else if (s[i] == ',' && depth == 0)
            return {s.substr(0, i), s.substr(i + 1)};
    }
    throw invalid_family("join needs two comma-separated graph specs");
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    if (spec == "figure1") return figure1();
    if (spec == "figure2") return figure2();
    if (spec.rfind("join(", 0) == 0 && spec.back() == ')') {
        auto [a, b] = split_join_args(spec.substr(5, spec.size() - 6));
        return join_graphs(parse_graph_spec(a), parse_graph_spec(b));
    }
    size_t colon = spec.find(':');
    if (colon == std::string::npos) throw invalid_family("unknown graph spec: " + spec);
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    try {
        args = parse_int_list(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw invalid_family("bad arguments in graph spec: " + spec);
    }
    if (name == "path" && args.size() == 1) return path_graph(args[0]);
    if (name == "cycle" && args.size() == 1) return cycle_graph(args[0]);
    if (name == "complete" && args.size() == 1) return complete_graph(args[0]);
    if (name == "complete_bipartite" && args.size() == 2) return complete_bipartite(args[0], args[1]);
    if (name == "theta") return theta_graph(args);
    throw invalid_family("unknown graph spec: " + spec);
}

}  // namespace ulcg
