#include "turanpack/codec.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace turanpack {

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 input", 0);
    int header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw ParseError("graph6 long form not supported (order > 62)", 0);
    if (header < 63 || header > 125) throw ParseError("malformed graph6 header", 0);
    int n = header - 63;
    std::int64_t bits = static_cast<std::int64_t>(n) * (n - 1) / 2;
    std::size_t want = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < want) throw ParseError("graph6 input truncated", text.size());
    if (text.size() > want) throw ParseError("trailing bytes after graph6 data", want);

    Graph g(n);
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t byte = 1 + static_cast<std::size_t>(k / 6);
            int c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126) throw ParseError("malformed graph6 byte", byte);
            int b = (c - 63) >> (5 - (k % 6)) & 1;
            if (b) g.add_edge(i, j);
        }
    }
    // padding bits of the final chunk must be zero
    if (bits % 6 != 0) {
        std::size_t byte = want - 1;
        int c = static_cast<unsigned char>(text[byte]) - 63;
        int pad = static_cast<int>(6 - bits % 6);
        if (c & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", byte);
    }
    for (std::size_t byte = 1; byte < want; ++byte) {
        int c = static_cast<unsigned char>(text[byte]);
        if (c < 63 || c > 126) throw ParseError("malformed graph6 byte", byte);
    }
    return g;
}

namespace {

// Byte offsets of the start of each element of the "edges" array, for
// pointing semantic errors at the offending edge.
std::vector<std::size_t> edge_offsets(std::string_view text) {
    std::vector<std::size_t> offs;
    std::size_t key = text.find("\"edges\"");
    if (key == std::string_view::npos) return offs;
    std::size_t open = text.find('[', key);
    if (open == std::string_view::npos) return offs;
    int depth = 0;
    for (std::size_t i = open; i < text.size(); ++i) {
        char c = text[i];
        if (c == '[') {
            ++depth;
            if (depth == 2) offs.push_back(i);
        } else if (c == ']') {
            if (--depth == 0) break;
        }
    }
    return offs;
}

std::size_t offset_of_edge(std::string_view text, std::size_t idx) {
    auto offs = edge_offsets(text);
    return idx < offs.size() ? offs[idx] : 0;
}

} // namespace

std::string to_hjson(const Hypergraph& h) {
    nlohmann::ordered_json j;
    j["n"] = h.n;
    j["p"] = h.p;
    auto edges = nlohmann::ordered_json::array();
    std::vector<std::vector<int>> lists;
    lists.reserve(h.edges.size());
    for (VertexMask e : h.edges) lists.push_back(mask_to_vertices(e));
    std::sort(lists.begin(), lists.end()); // lexicographic on sorted vertex lists
    for (const auto& l : lists) edges.push_back(l);
    j["edges"] = std::move(edges);
    return j.dump();
}

Hypergraph from_hjson(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("p") || !j.contains("edges"))
        throw ParseError("hypergraph JSON needs keys n, p, edges", 0);
    if (!j["n"].is_number_integer() || !j["p"].is_number_integer() || !j["edges"].is_array())
        throw ParseError("malformed hypergraph header", 0);
    int n = j["n"].get<int>();
    int p = j["p"].get<int>();
    if (n < 0 || n > 64) throw ParseError("vertex count out of range [0,64]", 0);
    if (p < 2) throw ParseError("uniformity must be at least 2", 0);

    Hypergraph h(n, p);
    std::vector<std::vector<int>> lists;
    std::size_t idx = 0;
    for (const auto& je : j["edges"]) {
        if (!je.is_array() || static_cast<int>(je.size()) != p)
            throw ParseError("edge does not have exactly p vertices", offset_of_edge(text, idx));
        std::vector<int> vs;
        for (const auto& jv : je) {
            if (!jv.is_number_integer()) throw ParseError("edge vertex is not an integer", offset_of_edge(text, idx));
            long long v = jv.get<long long>();
            if (v < 0 || v >= n) throw ParseError("edge vertex out of range", offset_of_edge(text, idx));
            vs.push_back(static_cast<int>(v));
        }
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (vs[i] <= vs[i - 1]) throw ParseError("edge vertices not strictly increasing", offset_of_edge(text, idx));
        if (!lists.empty() && !(lists.back() < vs))
            throw ParseError(lists.back() == vs ? "duplicate edge" : "edge list not sorted lexicographically",
                             offset_of_edge(text, idx));
        lists.push_back(std::move(vs));
        ++idx;
    }
    for (const auto& l : lists) h.edges.push_back(vertices_to_mask(l));
    std::sort(h.edges.begin(), h.edges.end());
    h.validate();
    return h;
}

Hypergraph parse_host_text(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') return from_hjson(text.substr(i));
    // graph6 payload: strip surrounding whitespace only
    std::size_t e = text.size();
    while (e > i && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return graph_to_hypergraph(from_graph6(text.substr(i, e - i)));
}

} // namespace turanpack
