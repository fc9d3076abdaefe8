#pragma once

#include <variant>
#include <vector>

#include "turanpack/graph.hpp"
#include "turanpack/hypergraph.hpp"

namespace turanpack {

// Part sizes of the Turan graph T(m,k), larger parts first. k = 0 yields no
// parts (edgeless convention); k > m yields m singleton parts.
std::vector<int> turan_part_sizes(int m, int k);

// Complete multipartite T(m,k) with parts on contiguous vertex ranges,
// larger parts first. T(m,0) is the edgeless graph on m vertices.
Graph make_turan(int m, int k);

// Join: disjoint union plus all cross edges. Vertices of g keep indices
// 0..order(g)-1; g2 is shifted above them.
Graph join(const Graph& g, const Graph& g2);
Graph disjoint_union(const Graph& g, const Graph& g2);

// Hypergraph join: union plus every p-set meeting both sides.
Hypergraph hyper_join(const Hypergraph& h, const Hypergraph& h2);
Hypergraph hyper_union(const Hypergraph& h, const Hypergraph& h2);

// Partial (m,U)-blowup: each vertex of U is replaced by `multiplicity`
// clones; an edge meeting U in q vertices becomes multiplicity^q clone
// edges. Vertices outside U keep their relative order at the front, then
// the clone blocks follow grouped by original vertex (ascending).
Hypergraph partial_blowup(const Hypergraph& h, VertexMask u_set, int multiplicity);

// Maps an original vertex to its new index block after partial_blowup.
std::vector<int> blowup_index_of_original(int n, VertexMask u_set, int multiplicity);

struct TuranTail {
    int m = 0;
    int x = 0;
};
struct SuppliedTail {
    Hypergraph tail;
};

// Declarative description of an extremal construction: a complete apex
// block plus a tail, joined unless the degenerate x = 0 regime calls for a
// plain disjoint union.
struct ConstructionSpec {
    int apex = 0;
    int p = 2;
    bool join_tail = true;
    std::variant<TuranTail, SuppliedTail> tail;

    int tail_order() const;
    int order() const { return apex + tail_order(); }
    Graph realize_graph() const;    // p == 2
    Hypergraph realize() const;     // any p, order <= 64
};

} // namespace turanpack
