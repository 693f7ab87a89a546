#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ulcg/engine.hpp"
#include "ulcg/graph.hpp"
#include "ulcg/lists.hpp"

namespace ulcg {

struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// For a uniquely (k+1)-colorable g whose color classes, sorted by size, have
// |C_i| >= i-1, builds a k-list assignment over colors 1..k+1 with a unique
// coloring. Inductive: recurse on g minus the largest class, append color k+1
// to every list, and give the removed class lists meeting exactly in {k+1}.
// The result is engine-verified before returning.
ListAssignment lemma1_assignment(const Graph& g, int k);

// A size function f and f-assignment L with sum f(v) = n + e exactly and a
// unique L-coloring. Processes `order` left to right: each new vertex gets a
// fresh singleton color which is also appended to its earlier neighbors.
std::pair<std::vector<int>, ListAssignment> equality_flist(const Graph& g,
                                                           const std::vector<int>& order);
// default order: descending degree, ties by index
std::pair<std::vector<int>, ListAssignment> equality_flist(const Graph& g);

// g plus a complete graph on colors 1..t (vertex n+j-1 standing for color j),
// with v_i joined to w_j exactly when j is not in L(v_i). When g has a unique
// L-coloring the result is uniquely t-colorable.
Graph gstar(const Graph& g, const ListAssignment& L, int t);

// One extra vertex adjacent to exactly N(v) (not to v itself).
Graph duplicate_vertex(const Graph& g, int v);

}  // namespace ulcg
