#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "turanpack/bits.hpp"
#include "turanpack/errors.hpp"

namespace turanpack {

// r-uniform family of vertex sets over a ground set of size n.
struct SetFamily {
    int n = 0;
    int r = 2;
    std::vector<VertexMask> sets;
    void validate() const; // uniform, duplicate-free, in range
};

// Cover of a family with no t pairwise disjoint members: every member meets
// A or contains at least two vertices of B; |A| <= t-1, |B| <= r(2t-2).
struct CoverPair {
    VertexMask a = 0;
    VertexMask b = 0;
};

// Thrown when cover_decomposition is handed a family with t pairwise
// disjoint members; carries the packing as a counterexample witness.
class PackingWitnessError : public Error {
public:
    PackingWitnessError(std::vector<VertexMask> packing)
        : Error("family contains t pairwise disjoint members"), packing_(std::move(packing)) {}
    const std::vector<VertexMask>& packing() const { return packing_; }

private:
    std::vector<VertexMask> packing_;
};

// min(cap, maximum number of pairwise disjoint members), exact backtracking.
int matching_number(const SetFamily& f, int cap);

// Lexicographically first maximum matching of size min(cap, nu).
std::vector<VertexMask> maximum_matching(const SetFamily& f, int cap);

// Direct check of the three CoverPair invariants.
bool verify_cover(const SetFamily& f, int t, const CoverPair& pair);

// Constructive decomposition following the inductive proof: recurse when
// nu < t-1, otherwise fix a maximum packing and grow the u-sequence,
// exiting at the first proof exit that fires. A completed sequence covering
// every member returns (A = {u_1..u_{t-1}}, B = empty).
CoverPair cover_decomposition(const SetFamily& f, int t);

// t pairwise disjoint members drawn from t distinct matchings, or nullopt.
// Each input family must itself be a matching.
std::optional<std::vector<std::pair<int, VertexMask>>> rainbow_matching(const std::vector<SetFamily>& matchings,
                                                                        int t);

} // namespace turanpack
