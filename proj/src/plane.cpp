#include "ulcg/plane.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ulcg {

int PlaneGraph::triangular_faces() const {
    int t = 0;
    for (const auto& f : faces)
        if (f.size() == 3) t++;
    return t;
}

void validate_plane(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (g.n == 0) throw plane_validation_error("empty plane graph");
    if (!is_connected(g)) throw plane_validation_error("plane graph must be connected");
    int e = g.edge_count();
    int f = static_cast<int>(pg.faces.size());
    if (g.n - e + f != 2)
        throw plane_validation_error("Euler formula violated: n - e + f = " +
                                     std::to_string(g.n - e + f));
    std::map<std::pair<int, int>, int> incidence;
    std::size_t walk_total = 0;
    for (const auto& face : pg.faces) {
        if (face.size() < 3) throw plane_validation_error("face walk shorter than 3");
        walk_total += face.size();
        for (size_t i = 0; i < face.size(); i++) {
            int a = face[i], b = face[(i + 1) % face.size()];
            if (a < 0 || a >= g.n || b < 0 || b >= g.n || !g.has_edge(a, b))
                throw plane_validation_error("face walk leaves the edge set");
            incidence[{std::min(a, b), std::max(a, b)}]++;
        }
    }
    if (walk_total != static_cast<std::size_t>(2 * e))
        throw plane_validation_error("face walk lengths do not sum to 2e");
    for (auto& [edge, count] : incidence)
        if (count != 2)
            throw plane_validation_error("edge " + std::to_string(edge.first) + "-" +
                                         std::to_string(edge.second) + " borders " +
                                         std::to_string(count) + " faces");
    if (incidence.size() != static_cast<std::size_t>(e))
        throw plane_validation_error("some edge borders no face");
}

PlaneGraph plane_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PlaneGraph pg;
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    pg.graph = graph_from_edges(n, edges);
    for (const auto& f : j.at("faces")) pg.faces.push_back(f.get<std::vector<int>>());
    validate_plane(pg);
    return pg;
}

PlaneGraph plane_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return plane_from_json_text(ss.str());
}

}  // namespace ulcg
