#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ulcg/graph.hpp"

namespace ulcg {

struct g6_parse_error : std::runtime_error {
    std::size_t offset;
    g6_parse_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " at byte " + std::to_string(off)), offset(off) {}
};

struct g6_unsupported_size : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6: upper-triangle bits packed into 6-bit groups, each byte offset by 63.
// Only the single-byte size form (n <= 62) is supported.
Graph graph6_decode(const std::string& text);
std::string graph6_encode(const Graph& g);

}  // namespace ulcg
