#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ulcg/choosability.hpp"
#include "ulcg/engine.hpp"
#include "ulcg/graph.hpp"
#include "ulcg/lists.hpp"

namespace ulcg {

// Outcome of a UkLC / UfLC witness search.
struct WitnessReport {
    bool decided = false;     // false only when the budget ran out
    std::optional<std::pair<ListAssignment, Coloring>> witness;
    std::uint64_t colorings_considered = 0;  // target colorings examined
    std::uint64_t nodes = 0;                 // node expansions across all subsearches
    std::vector<int> f;                      // queried list sizes per vertex
    int k = 0;                               // uniform size when applicable, else 0
};

// Complete search over target colorings (canonical proper partitions with
// between max(f) and n classes) and candidate assignments
// L(v) = {c(v)} union S_v with S_v an (f(v)-1)-subset of the colors on N(v).
// Target colorings are explored in parallel; the report is reduced
// deterministically (first witness in canonical order, node counts summed
// over the decided prefix), so results are thread-count independent.
WitnessReport is_uklc(const Graph& g, int k, const search_options& opts = {});
WitnessReport is_uflc(const Graph& g, const std::vector<int>& f, const search_options& opts = {});

struct MNumberResult {
    int m = 0;
    int ceiling = 0;  // floor(average degree / 2) + 2
    // verified witness for each k in 2..m-1
    std::vector<std::pair<int, std::pair<ListAssignment, Coloring>>> witnesses;
};

struct m_number_undecided : std::runtime_error {
    int k;  // the level whose search ran out of budget
    MNumberResult partial;
    m_number_undecided(int k_, MNumberResult partial_)
        : std::runtime_error("m-number search undecided at k = " + std::to_string(k_)),
          k(k_),
          partial(std::move(partial_)) {}
};

// Ascends k = 2, 3, ... until the first k with no UkLC witness; the average
// degree bound guarantees termination at or before floor(d/2) + 2 and is
// asserted at runtime.
MNumberResult m_number(const Graph& g, const search_options& opts = {},
                       engine_cache* cache = nullptr);

// m-number of the line graph; at most max_degree + 1, with equality only for
// regular graphs (asserted).
int edge_m_number(const Graph& g, const search_options& opts = {}, engine_cache* cache = nullptr);

}  // namespace ulcg
