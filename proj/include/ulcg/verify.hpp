#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulcg/choosability.hpp"
#include "ulcg/graph.hpp"
#include "ulcg/lists.hpp"
#include "ulcg/plane.hpp"
#include "ulcg/unique_list.hpp"

namespace ulcg {

// Replay of one inequality on one instance. Failures carry the numbers; they
// are reportable events (a bug or a counterexample), never silently dropped.
struct CheckOutcome {
    std::string claim_id;
    std::string instance;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sum f(v) <= n + e for a verified unique-coloring witness
CheckOutcome check_sigmafv(const Graph& g, const WitnessReport& report,
                           const std::string& instance = "");
// m <= floor(average degree / 2) + 2
CheckOutcome check_bound(const Graph& g, const std::string& instance = "",
                         const search_options& opts = {}, engine_cache* cache = nullptr);
// bipartite only: 2^(m-2) <= n, compared in exact integer arithmetic
CheckOutcome check_logbnd(const Graph& g, const std::string& instance = "",
                          const search_options& opts = {}, engine_cache* cache = nullptr);
// at most 7 triangular faces forces m <= 3 (checked per supplied embedding)
CheckOutcome check_8face(const PlaneGraph& pg, const std::string& instance = "",
                         const search_options& opts = {}, engine_cache* cache = nullptr);
// at least k-1 color classes contain a vertex seeing >= k colors
CheckOutcome check_kcolor(const Graph& g, const ListAssignment& L, const Coloring& c, int k,
                          const std::string& instance = "");
// edge m-number <= max degree + 1, tight only for regular graphs
CheckOutcome check_edge_mnumber(const Graph& g, const std::string& instance = "",
                                const search_options& opts = {}, engine_cache* cache = nullptr);
// every k-list-critical graph has m-number at most k
CheckOutcome check_critical_mnumber(const Graph& g, const std::string& instance = "",
                                    const search_options& opts = {}, engine_cache* cache = nullptr);

// One corpus line: a graph6 record plus an optional JSON sidecar,
// e.g.  C~ {"name":"k4","planar":true,"faces":[[0,1,2],...]}
struct CorpusEntry {
    std::string graph6;
    Graph graph;
    nlohmann::json sidecar;  // empty object when absent

    std::string name() const;
};

std::vector<CorpusEntry> read_corpus_file(const std::string& path);
std::vector<Graph> read_graph6_file(const std::string& path);

// For every U3LC hit in a planar corpus, the graph must contain K4; an entry
// flagged triangle_free must not be U3LC at all. Emits one outcome per entry;
// a failed outcome is a research-grade counterexample.
std::vector<CheckOutcome> scan_conjecture_u3lc_planar(const std::vector<CorpusEntry>& corpus,
                                                      const search_options& opts = {});

nlohmann::ordered_json outcome_to_json(const CheckOutcome& o);

}  // namespace ulcg
