#pragma once

#include <cstdint>
#include <vector>

#include "turanpack/hypergraph.hpp"

namespace turanpack {

// Packing witness for one rejected candidate set: the partial (m,W)-blowup
// of W contains the recorded t pairwise disjoint r-sets.
struct BlowupFailure {
    VertexMask subset = 0;
    std::vector<VertexMask> packing;
};

struct BlowupCertificate {
    int b = -1;
    VertexMask chosen_u = 0;          // lexicographically smallest feasible set
    bool forbidden_saturated = false; // H itself contains tK_r^p
    int multiplicity = 0;             // m used for the blowups
    std::vector<BlowupFailure> failures; // every candidate of size b+1
};

// b(H) = b(H,t,r): the largest |U| whose partial (m,U)-blowup stays
// tK_r^p-free, searched from |U| = |V(H)| downward. m defaults to t, which
// suffices to decide containment; other values are accepted so the claim is
// testable. If H itself contains tK_r^p, returns b = -1 with the
// forbidden_saturated flag.
std::pair<int, BlowupCertificate> b_parameter(const Hypergraph& h, int t, int r, int multiplicity = 0);

} // namespace turanpack
