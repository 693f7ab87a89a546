// Regenerates the graph6 corpora under data/: all graphs up to isomorphism
// for small orders, one canonical record per line.
//
//   make_corpus connected <max_n>   every connected graph on 1..max_n vertices
//   make_corpus all <max_n>         every graph on 1..max_n vertices

#include <iostream>
#include <string>

#include "ulcg/canonical.hpp"
#include "ulcg/graph6.hpp"

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: make_corpus {connected|all} <max_n>\n";
        return 1;
    }
    std::string mode = argv[1];
    int max_n = std::stoi(argv[2]);
    if ((mode != "connected" && mode != "all") || max_n < 1 || max_n > 7) {
        std::cerr << "usage: make_corpus {connected|all} <max_n>   (max_n in 1..7)\n";
        return 1;
    }
    for (int n = 1; n <= max_n; n++)
        for (const auto& g : ulcg::enumerate_graphs(n, mode == "connected"))
            std::cout << ulcg::graph6_encode(g) << "\n";
    return 0;
}
