#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ulcg/choosability.hpp"
#include "ulcg/decompose.hpp"
#include "ulcg/graph.hpp"

namespace ulcg {

// Core-shape recognizer for 2-choosability: every component's core must be a
// single vertex, an even cycle, or a theta graph with lengths {2,2,even}.
bool is_2_choosable_fast(const Graph& g);

// Block recognizer for unique 2-list colorability: true iff some block is
// neither a cycle nor complete nor complete bipartite.
bool is_u2lc_fast(const Graph& g);

// Sorted path lengths when g consists of two vertices of equal degree d >= 3
// joined by d internally disjoint paths (all other degrees 2).
std::optional<std::vector<int>> recognize_theta(const Graph& g);

enum class CriticalFamily { none, odd_cycle, two_even_cycles_path, theta_same_parity, theta_2_2_2_2r };

struct CriticalityVerdict {
    bool is_critical = false;
    CriticalFamily family = CriticalFamily::none;
    // reproduction data: cycle vertices, theta lengths, or the two cycle blocks
    std::vector<std::vector<int>> certificate;
};

std::string critical_family_name(CriticalFamily f);

// Matches the four 3-list-critical shapes: odd cycles; two even cycles joined
// by a path (possibly of length zero); theta r,s,t of equal parity with at
// most one length 2; theta 2,2,2,2r.
CriticalityVerdict is_3_list_critical_fast(const Graph& g);

// chi_l(g - e) < chi_l(g) for every edge, and no isolated vertices. Any other
// proper subgraph sits inside some edge-deleted one, and removing an isolated
// vertex cannot lower the list chromatic number, so this decides criticality.
bool is_list_critical_bruteforce(const Graph& g, const search_options& opts = {},
                                 engine_cache* cache = nullptr);

// Same with edge versions: chi_l(L(g - e)) < chi_l(L(g)) for every edge.
bool is_edge_list_critical(const Graph& g, const search_options& opts = {},
                           engine_cache* cache = nullptr);

// K_{1,m} with m >= 1.
bool is_star(const Graph& g);

}  // namespace ulcg
