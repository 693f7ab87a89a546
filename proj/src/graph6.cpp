#include "ulcg/graph6.hpp"

namespace ulcg {

static const std::string kHeader = ">>graph6<<";

Graph graph6_decode(const std::string& text) {
    std::size_t pos = 0;
    if (text.rfind(kHeader, 0) == 0) pos = kHeader.size();
    if (pos >= text.size()) throw g6_parse_error("empty graph6 record", pos);

    for (std::size_t i = pos; i < text.size(); i++) {
        unsigned char c = text[i];
        if (c < 63 || c > 126) throw g6_parse_error("non-printable byte", i);
    }

    unsigned char size_byte = text[pos];
    if (size_byte == 126) throw g6_unsupported_size("multi-byte graph6 size form not supported");
    int n = size_byte - 63;
    std::size_t body = pos + 1;

    std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bytes_needed = (bits_needed + 5) / 6;
    if (text.size() - body != bytes_needed)
        throw g6_parse_error("malformed length prefix: expected " + std::to_string(bytes_needed) +
                                 " data bytes, got " + std::to_string(text.size() - body),
                             pos);

    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++, bit++) {
            unsigned char byte = text[body + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    }
    // padding bits beyond the triangle must be zero
    for (std::size_t b = bits_needed; b < bytes_needed * 6; b++) {
        unsigned char byte = text[body + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1u)
            throw g6_parse_error("nonzero trailing bits", body + b / 6);
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    if (g.n > kMaxVertices)
        throw g6_unsupported_size("graph6 single-byte form requires n <= 62, got " +
                                  std::to_string(g.n));
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    std::size_t bits = static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
    std::size_t nbytes = (bits + 5) / 6;
    std::string data(nbytes, 0);
    std::size_t bit = 0;
    for (int j = 1; j < g.n; j++)
        for (int i = 0; i < j; i++, bit++)
            if (g.has_edge(i, j)) data[bit / 6] |= char(1 << (5 - bit % 6));
    for (char& c : data) c += 63;
    return out + data;
}

}  // namespace ulcg
