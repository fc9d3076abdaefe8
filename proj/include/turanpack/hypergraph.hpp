#pragma once

#include <cstdint>
#include <vector>

#include "turanpack/bits.hpp"
#include "turanpack/graph.hpp"

namespace turanpack {

// p-uniform hypergraph on at most 64 vertices. Edges are p-element vertex
// bitmasks kept strictly sorted in colex (= numeric mask) order; the JSON
// codec re-sorts into lexicographic vertex-list order for output.
// p = 2 instances round-trip losslessly to Graph.
struct Hypergraph {
    int n = 0;
    int p = 2;
    std::vector<VertexMask> edges;

    Hypergraph() = default;
    Hypergraph(int n_, int p_);

    static Hypergraph complete(int n, int p);

    bool has_edge(VertexMask e) const;
    void add_edge(VertexMask e);
    void add_edge(const std::vector<int>& vs);

    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }

    // Checks every structural invariant; throws std::invalid_argument.
    void validate() const;

    bool operator==(const Hypergraph&) const = default;
};

Hypergraph graph_to_hypergraph(const Graph& g); // requires order <= 64
Graph hypergraph_to_graph(const Hypergraph& h); // requires p == 2

} // namespace turanpack
