#pragma once

#include <string>
#include <vector>

#include "ulcg/graph.hpp"

namespace ulcg {

// One block of a biconnected decomposition. `vertices` holds the original
// labels in ascending order; `graph` is the block on local indices.
struct Block {
    std::vector<int> vertices;
    Graph graph;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;  // ascending
};

// Repeatedly deletes a vertex of degree 1; the result is order-independent.
// Returned graph is reindexed densely; surviving original labels are appended
// to *kept when requested.
Graph core(const Graph& g, std::vector<int>* kept = nullptr);

// Standard biconnected decomposition. Isolated vertices become K1 blocks so
// that the union of blocks covers the graph.
BlockDecomposition blocks(const Graph& g);

enum class BlockClass { cycle, complete, complete_bipartite, other };

// Tested in the order cycle, complete, complete bipartite, so K3 reports as a
// cycle and K2 as complete.
BlockClass classify_block(const Graph& b);
std::string block_class_name(BlockClass c);

// Vertex per edge of g (edges in lexicographic order), adjacent iff the edges
// share an endpoint.
Graph line_graph(const Graph& g);

bool contains_k4(const Graph& g);

}  // namespace ulcg
