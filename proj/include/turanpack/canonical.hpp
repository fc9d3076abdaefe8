#pragma once

#include <cstdint>
#include <vector>

#include "turanpack/graph.hpp"
#include "turanpack/hypergraph.hpp"

namespace turanpack {

// Rank <-> mask table for the p-subsets of {0..n-1}, ranked in the
// lexicographic order of their sorted vertex lists.
class SubsetCodec {
public:
    SubsetCodec(int n, int p);
    int n() const { return n_; }
    int p() const { return p_; }
    int ranks() const { return static_cast<int>(mask_of_.size()); }
    VertexMask mask_of(int rank) const { return mask_of_[static_cast<std::size_t>(rank)]; }
    int rank_of(VertexMask m) const { return rank_of_[m]; }

    // Edge-presence bits with rank 0 at the most significant position, so
    // that numeric maximum corresponds to lexicographically minimal edge
    // list. Requires C(n,p) <= 64.
    std::uint64_t encode(const Hypergraph& h) const;
    Hypergraph decode(std::uint64_t code) const;

private:
    int n_, p_;
    std::vector<VertexMask> mask_of_;
    std::vector<int> rank_of_;
};

// Canonical code: the encoding of the lexicographically minimal edge list
// over all vertex permutations. Guards: C(n,p) <= 64 and n <= 8.
std::uint64_t canonical_code(const Hypergraph& h, const SubsetCodec& codec);
std::uint64_t canonical_code(const Hypergraph& h);
Hypergraph canonical_form(const Hypergraph& h);
Graph canonical_form(const Graph& g);

// Exact isomorphism for pattern-sized inputs (n <= 10), by backtracking
// with degree pruning.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

} // namespace turanpack
