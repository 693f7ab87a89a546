#include "ulcg/serialize.hpp"

#include "ulcg/graph6.hpp"

namespace ulcg {

nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["graph6"] = graph6_encode(g);
    return j;
}

nlohmann::ordered_json lists_to_json(const ListAssignment& L) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (int v = 0; v < L.size(); v++) j[std::to_string(v)] = L.lists[v];
    return j;
}

nlohmann::ordered_json coloring_to_json(const Coloring& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (size_t v = 0; v < c.color.size(); v++) j[std::to_string(v)] = c.color[v];
    return j;
}

nlohmann::ordered_json witness_report_to_json(const WitnessReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = "ulcg.witness/1";
    if (rep.k > 0)
        j["k"] = rep.k;
    else {
        nlohmann::ordered_json f = nlohmann::ordered_json::object();
        for (size_t v = 0; v < rep.f.size(); v++) f[std::to_string(v)] = rep.f[v];
        j["f"] = f;
    }
    j["decided"] = rep.decided;
    if (rep.witness) {
        j["witness"]["lists"] = lists_to_json(rep.witness->first);
        j["witness"]["coloring"] = coloring_to_json(rep.witness->second);
    } else {
        j["witness"] = nullptr;
    }
    j["stats"]["colorings_considered"] = rep.colorings_considered;
    j["stats"]["nodes"] = rep.nodes;
    return j;
}

nlohmann::ordered_json mnumber_to_json(const MNumberResult& res) {
    nlohmann::ordered_json j;
    j["schema"] = "ulcg.mnumber/1";
    j["m"] = res.m;
    j["ceiling"] = res.ceiling;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [k, pair] : res.witnesses) {
        w[std::to_string(k)]["lists"] = lists_to_json(pair.first);
        w[std::to_string(k)]["coloring"] = coloring_to_json(pair.second);
    }
    j["witnesses"] = w;
    return j;
}

nlohmann::ordered_json choosable_to_json(const choosable_result& res, int k) {
    nlohmann::ordered_json j;
    j["schema"] = "ulcg.choosable/1";
    j["k"] = k;
    j["choosable"] = res.choosable;
    j["bad_assignment"] = res.bad ? lists_to_json(*res.bad) : nlohmann::ordered_json(nullptr);
    j["nodes"] = res.nodes;
    return j;
}

nlohmann::ordered_json verdict_to_json(const CriticalityVerdict& v) {
    nlohmann::ordered_json j;
    j["schema"] = "ulcg.critical/1";
    j["is_critical"] = v.is_critical;
    j["family"] = critical_family_name(v.family);
    j["certificate"] = v.certificate;
    return j;
}

ListAssignment lists_from_json(const nlohmann::json& j, int n) {
    ListAssignment L(n);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= n) throw std::invalid_argument("list vertex out of range: " + it.key());
        L.lists[v] = it.value().get<std::vector<int>>();
    }
    L.normalize();
    return L;
}

std::vector<int> sizes_from_json(const nlohmann::json& j, int n) {
    std::vector<int> f(n, 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range: " + it.key());
        f[v] = it.value().get<int>();
    }
    return f;
}

}  // namespace ulcg
