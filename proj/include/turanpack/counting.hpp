#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "turanpack/graph.hpp"
#include "turanpack/hypergraph.hpp"

namespace turanpack {

// Vertex sets of K_q^p copies in some host, lexicographically sorted.
struct CliqueFamily {
    int n = 0;
    int q = 0;
    std::vector<VertexMask> sets;
};

// Number of q-subsets all of whose p-subsets are edges. q < p counts every
// q-subset (the condition is vacuous).
std::int64_t count_cliques(const Graph& g, int q);
std::int64_t count_cliques(const Hypergraph& h, int q);
CliqueFamily list_cliques(const Graph& g, int q);   // order <= 64
CliqueFamily list_cliques(const Hypergraph& h, int q);

// |Aut| by exhaustive permutation check; pattern-sized inputs (n <= 10).
std::int64_t automorphism_count(const Hypergraph& h);
std::int64_t automorphism_count(const Graph& g);

struct PackingSearch {
    bool found = false;
    std::vector<VertexMask> witness; // t pairwise disjoint r-sets when found
};

// Exact test for t pairwise vertex-disjoint K_r^p copies. Backtracking over
// the r-clique list; successive picks must increase the minimum vertex,
// which kills permutation-equivalent packings.
PackingSearch find_disjoint_cliques(const Hypergraph& h, int t, int r);
PackingSearch find_disjoint_cliques(const Graph& g, int t, int r);
bool contains_disjoint_cliques(const Hypergraph& h, int t, int r);
bool contains_disjoint_cliques(const Graph& g, int t, int r);

// Copy counting: injective edge-preserving maps divided by |Aut(pattern)|.
// Copies are unlabeled subgraphs, not necessarily induced. The pattern-side
// preprocessing (vertex order, edge schedule, automorphisms) is reused
// across hosts.
class CopyCounter {
public:
    explicit CopyCounter(Hypergraph pattern); // |V| <= 10
    const Hypergraph& pattern() const { return pat_; }
    std::int64_t automorphisms() const { return aut_; }
    std::int64_t injective_maps(const Hypergraph& host) const;
    std::int64_t injective_maps(const Graph& host) const; // pattern must be 2-uniform
    std::int64_t count(const Hypergraph& host) const;
    std::int64_t count(const Graph& host) const;
    // Allocation-free path for enumeration loops: host given as adjacency
    // words over at most 32 vertices; pattern must be 2-uniform.
    std::int64_t count_rows(const std::uint32_t* rows, int host_n) const;

private:
    Hypergraph pat_;
    int k_;
    std::vector<int> order_;                       // position -> pattern vertex
    std::vector<std::vector<std::vector<int>>> sched_; // per position: edges as position lists
    std::vector<VertexMask> adj_before_;           // p=2: earlier positions adjacent to position k
    std::int64_t aut_;
};

std::int64_t count_copies(const Hypergraph& pattern, const Hypergraph& host);

} // namespace turanpack
