#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "ulcg/graph.hpp"
#include "ulcg/lists.hpp"

namespace ulcg {

struct search_options {
    // node-expansion limit for one search task
    std::uint64_t budget = 1'000'000'000;
};

struct budget_exceeded : std::runtime_error {
    std::uint64_t nodes;
    explicit budget_exceeded(std::uint64_t nodes_)
        : std::runtime_error("search budget exceeded after " + std::to_string(nodes_) +
                             " node expansions"),
          nodes(nodes_) {}
};

struct count_result {
    std::uint64_t count = 0;     // min(cap, exact count)
    std::optional<Coloring> first;  // first coloring in search order, if any
    std::uint64_t nodes = 0;
};

// Counts proper colorings of g with c(v) in L(v), up to cap. Backtracking
// order: vertices by descending degree then index, colors ascending.
count_result count_list_colorings(const Graph& g, const ListAssignment& L, std::uint64_t cap,
                                  const search_options& opts = {});

// The L-coloring of g when it is unique, i.e. count caps at exactly 1 with cap 2.
std::optional<Coloring> unique_list_coloring(const Graph& g, const ListAssignment& L,
                                             const search_options& opts = {});

// Enumerates canonical proper partitions (classes ordered by minimum vertex,
// written as a restricted-growth coloring) with min_classes <= t <= max_classes.
// Returning false from fn stops the enumeration.
void enumerate_proper_partitions(const Graph& g, int min_classes, int max_classes,
                                 const std::function<bool(const std::vector<int>&, int)>& fn);

int chromatic_number(const Graph& g);
bool is_k_colorable(const Graph& g, int k);

namespace detail {
// Fast path for internal callers: lists given as bitmasks over a palette of
// at most 64 colors; returned colorings use palette indices.
count_result count_mask_colorings(const Graph& g, const std::vector<std::uint64_t>& masks,
                                  std::uint64_t cap, std::uint64_t budget);
}  // namespace detail

// Present iff g has exactly one proper coloring with at most k classes and it
// uses exactly k classes; returns the canonical representative (colors 0..k-1
// in order of first appearance).
std::optional<Coloring> is_uniquely_k_colorable(const Graph& g, int k);

}  // namespace ulcg
