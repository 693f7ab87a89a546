#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ulcg/graph.hpp"

namespace ulcg {

struct plane_validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A plane graph ingested from a fixture: the abstract graph plus explicit
// faces as closed vertex walks. Planarity itself is asserted by the fixture's
// provenance; validation checks Euler's formula and edge-face consistency.
struct PlaneGraph {
    Graph graph;
    std::vector<std::vector<int>> faces;

    int triangular_faces() const;
};

// Throws plane_validation_error unless the graph is connected, n - e + f = 2,
// every face walk follows edges, and every edge borders exactly two faces
// counted with multiplicity.
void validate_plane(const PlaneGraph& pg);

// {"n": int, "edges": [[u,v],...], "faces": [[v0,v1,...],...]}
PlaneGraph plane_from_json_text(const std::string& text);
PlaneGraph plane_from_json_file(const std::string& path);

}  // namespace ulcg
