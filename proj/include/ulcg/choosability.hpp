#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulcg/engine.hpp"
#include "ulcg/graph.hpp"
#include "ulcg/lists.hpp"

namespace ulcg {

struct choosable_result {
    bool choosable = true;
    std::optional<ListAssignment> bad;  // an assignment with zero colorings, when not choosable
    std::uint64_t nodes = 0;
};

// Memo for engine results keyed by canonical graph6 form. Thread-safe;
// results are deterministic so concurrent writers always agree.
class engine_cache {
  public:
    std::optional<choosable_result> get_choosable(const std::string& key, int k);
    void put_choosable(const std::string& key, int k, const choosable_result& r);
    std::optional<int> get_chi_list(const std::string& key);
    void put_chi_list(const std::string& key, int v);
    std::optional<int> get_m_number(const std::string& key);
    void put_m_number(const std::string& key, int v);

  private:
    std::mutex mu_;
    std::map<std::pair<std::string, int>, choosable_result> choosable_;
    std::map<std::string, int> chi_list_;
    std::map<std::string, int> m_;
};

// Decides whether every k-list assignment to g admits a proper coloring.
// Complete search: vertices of degree < k are peeled greedily, then canonical
// list assignments (fresh colors taken consecutively, every closed vertex's
// list covered by its neighborhood lists) are enumerated on each core
// component. Throws budget_exceeded when the node limit is hit.
choosable_result is_k_choosable(const Graph& g, int k, const search_options& opts = {},
                                engine_cache* cache = nullptr);

// Least k such that g is k-choosable.
int list_chromatic_number(const Graph& g, const search_options& opts = {},
                          engine_cache* cache = nullptr);

}  // namespace ulcg
