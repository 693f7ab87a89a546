#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ulcg/graph.hpp"

namespace ulcg {

struct invalid_family : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// Two poles (vertices 0 and 1) joined by internally disjoint paths of the
// given lengths; path interiors are labelled in input order. At most one
// length may be 1 (a pole-pole edge) so the result stays simple.
Graph theta_graph(const std::vector<int>& lengths);

// Disjoint union of g and h (h shifted by g.n) plus all cross edges.
Graph join_graphs(const Graph& g, const Graph& h);

// Join of K2 and P5: poles 0,1 adjacent to each other and to the path 2-3-4-5-6.
Graph figure1();
// Two 4-cycles sharing the cut vertex 0: cycles 0-1-2-3 and 0-4-5-6.
Graph figure2();

// Parses generator specs like "figure1", "cycle:5", "complete_bipartite:2,3",
// "theta:2,2,4", "join(complete:2,path:5)".
Graph parse_graph_spec(const std::string& spec);

}  // namespace ulcg
