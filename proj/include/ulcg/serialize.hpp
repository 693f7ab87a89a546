#pragma once

#include <string>

#include <json.hpp>

#include "ulcg/choosability.hpp"
#include "ulcg/graph.hpp"
#include "ulcg/lists.hpp"
#include "ulcg/recognizers.hpp"
#include "ulcg/unique_list.hpp"

namespace ulcg {

// Keys are vertex ids in numeric order, so dumps are byte-stable.
nlohmann::ordered_json graph_to_json(const Graph& g);
nlohmann::ordered_json lists_to_json(const ListAssignment& L);
nlohmann::ordered_json coloring_to_json(const Coloring& c);
nlohmann::ordered_json witness_report_to_json(const WitnessReport& rep);
nlohmann::ordered_json mnumber_to_json(const MNumberResult& res);
nlohmann::ordered_json choosable_to_json(const choosable_result& res, int k);
nlohmann::ordered_json verdict_to_json(const CriticalityVerdict& v);

ListAssignment lists_from_json(const nlohmann::json& j, int n);
std::vector<int> sizes_from_json(const nlohmann::json& j, int n);

}  // namespace ulcg
