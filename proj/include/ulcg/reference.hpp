#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ulcg/graph.hpp"
#include "ulcg/lists.hpp"

namespace ulcg {
namespace reference {

// Plain serial reference implementations, kept deliberately simple and
// independent of the optimized engines. They enumerate without symmetry
// reduction, so they are only usable on toy sizes; the test suite and the
// benchmark drive both paths and compare.

std::uint64_t count_list_colorings(const Graph& g, const ListAssignment& L, std::uint64_t cap);

// Enumerates every k-list assignment over the palette {0..n*k-1}.
bool is_k_choosable(const Graph& g, int k);

// Enumerates every k-list assignment over the palette {0..n*k-1} and tests
// each for a unique coloring. Exponential in n*k; keep n very small.
bool is_uklc(const Graph& g, int k);

}  // namespace reference
}  // namespace ulcg
