#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ulcg/graph.hpp"

namespace ulcg {

// Canonical relabeling: the permutation minimizing the upper-triangle edge
// bitstring. Exact (all n! permutations), so only for n <= 8; larger graphs
// are returned unchanged with *exact = false. When perm is given it receives
// the relabeling used (perm[old] = new).
Graph canonical_form(const Graph& g, bool* exact = nullptr, std::vector<int>* perm = nullptr);
std::string canonical_graph6(const Graph& g);

// All graphs on exactly n vertices up to isomorphism (n <= 7), emitted in
// canonical form. connected_only filters to connected graphs.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace ulcg
