#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "turanpack/construct.hpp"
#include "turanpack/counting.hpp"

namespace turanpack {

// Parameter tuple (n, s, r, t, p) of ex(n, K_s^p, tK_r^p).
struct ProblemParams {
    std::int64_t n = 0;
    int s = 2;
    int r = 2;
    int t = 1;
    int p = 2;
    void validate() const; // p >= 2, r >= p, s >= p, t >= 1, n >= 0
};

// x = ceil((tr-s)/(t-1)) - 1. Defined for t >= 2 and r <= s < tr; always
// lands in [0, r-1].
int x_exponent(int s, int r, int t);

// N(K_q, T(m,k)) by part-size products (elementary symmetric polynomial).
std::int64_t turan_clique_count(std::int64_t m, int k, int q);

// Exact ex(n, K_s, tK_r) for p = 2, total over the whole parameter space:
// s >= tr gives 0, t = 1 routes to Zykov, s < r uses the K_{t-1} apex with a
// T(n-t+1, r-1) tail, and n below the apex size degenerates to K_n.
std::int64_t ex_closed_value(const ProblemParams& params);

// binomial(tr-1, s); requires s > t(r-1).
std::int64_t lemma_hgt_value(int s, int r, int t);

using TailSupplier = std::function<Hypergraph(int m, int x, int p)>;

// The construction K_{t(r-x)-1}^p + tail. For p = 2 the tail is
// T(n-t(r-x)+1, x); otherwise tail_supplier must produce a K_{x+1}^p-free
// p-graph (checked). x = 0 degenerates to a disjoint union with an edgeless
// tail: joining would create tK_r^p through the apex.
ConstructionSpec extremal_construction_spec(const ProblemParams& params, const TailSupplier& tail_supplier = {});
Graph extremal_construction_graph(const ProblemParams& params);
Hypergraph extremal_construction(const ProblemParams& params, const TailSupplier& tail_supplier = {});

// One deletion class of the reduced objective: a subgraph H_i = H - D
// together with alpha_i = the number of copies of H in join(H_i, K_{t-1})
// that contain every vertex and edge of H_i. Classes are found per concrete
// deletion set, grouped by isomorphism type; `deletion_sets` records how
// many deletion sets produced the type.
struct AlphaEntry {
    Hypergraph subgraph;
    std::int64_t alpha = 0;
    int deleted = 0;
    std::int64_t deletion_sets = 0;
};

struct AlphaTable {
    Hypergraph pattern;
    int t = 2;
    std::vector<AlphaEntry> entries;
};

AlphaTable alpha_coefficients(const Hypergraph& h, int t); // p = 2, |V| <= 10

// x(G) = sum over classes of alpha_i * N(H_i, G); equals
// N(H, join(K_{t-1}, G)).
std::int64_t reduced_objective(const AlphaTable& table, const Graph& g);
std::int64_t reduced_objective(const Hypergraph& h, int t, const Graph& g);

// H - D as a labeled hypergraph (vertices outside D keep relative order).
Hypergraph delete_vertices(const Hypergraph& h, VertexMask d);

} // namespace turanpack
