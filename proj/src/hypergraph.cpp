#include "turanpack/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace turanpack {

Hypergraph::Hypergraph(int n_, int p_) : n(n_), p(p_) {
    if (n < 0 || n > 64) throw std::invalid_argument("hypergraph order must be in [0,64]");
    if (p < 2) throw std::invalid_argument("uniformity must be at least 2");
}

Hypergraph Hypergraph::complete(int n, int p) {
    Hypergraph h(n, p);
    for_each_ksubset_lex(n, p, [&](VertexMask e) { h.edges.push_back(e); });
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

bool Hypergraph::has_edge(VertexMask e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

void Hypergraph::add_edge(VertexMask e) {
    if (popcount(e) != p) throw std::invalid_argument("edge does not have exactly p vertices");
    if (e & ~full_mask(n)) throw std::invalid_argument("edge vertex out of range");
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) throw std::invalid_argument("duplicate edge");
    edges.insert(it, e);
}

void Hypergraph::add_edge(const std::vector<int>& vs) {
    VertexMask e = vertices_to_mask(vs);
    if (static_cast<int>(vs.size()) != popcount(e)) throw std::invalid_argument("repeated vertex in edge");
    add_edge(e);
}

void Hypergraph::validate() const {
    if (n < 0 || n > 64) throw std::invalid_argument("hypergraph order must be in [0,64]");
    if (p < 2) throw std::invalid_argument("uniformity must be at least 2");
    VertexMask range = full_mask(n);
    VertexMask prev = 0;
    bool first = true;
    for (VertexMask e : edges) {
        if (popcount(e) != p) throw std::invalid_argument("edge does not have exactly p vertices");
        if (e & ~range) throw std::invalid_argument("edge vertex out of range");
        if (!first && e <= prev) throw std::invalid_argument("edges not strictly sorted");
        prev = e;
        first = false;
    }
}

Hypergraph graph_to_hypergraph(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("graph too large for hypergraph form");
    Hypergraph h(g.order(), 2);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) h.edges.push_back(bit(u) | bit(v));
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

Graph hypergraph_to_graph(const Hypergraph& h) {
    if (h.p != 2) throw std::invalid_argument("only 2-uniform hypergraphs convert to Graph");
    Graph g(h.n);
    for (VertexMask e : h.edges) {
        int u = lowest_vertex(e);
        int v = lowest_vertex(e & (e - 1));
        g.add_edge(u, v);
    }
    return g;
}

} // namespace turanpack
