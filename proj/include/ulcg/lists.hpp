#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ulcg/graph.hpp"

namespace ulcg {

// Per-vertex color lists. Colors are small nonnegative integers; each list is
// kept sorted and duplicate-free.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(int n) : lists(n) {}

    int size() const { return static_cast<int>(lists.size()); }
    void normalize();

    // all colors appearing in any list, sorted
    std::vector<int> palette() const;
    bool operator==(const ListAssignment&) const = default;
};

struct Coloring {
    std::vector<int> color;
    bool operator==(const Coloring&) const = default;
};

// Checks c is proper on g and chosen from L.
bool is_valid_list_coloring(const Graph& g, const ListAssignment& L, const Coloring& c);

void require_covers(const Graph& g, const ListAssignment& L);

}  // namespace ulcg
