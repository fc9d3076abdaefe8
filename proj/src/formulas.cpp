#include "turanpack/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turanpack/canonical.hpp"
#include "turanpack/errors.hpp"

namespace turanpack {

void ProblemParams::validate() const {
    if (p < 2) throw std::invalid_argument("uniformity p must be at least 2");
    if (r < p) throw std::invalid_argument("r must be at least p");
    if (s < p) throw std::invalid_argument("s must be at least p");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
}

int x_exponent(int s, int r, int t) {
    if (t < 2) throw std::invalid_argument("x exponent requires t >= 2 (the formula divides by t-1)");
    if (s < r) throw std::invalid_argument("x exponent requires s >= r");
    if (s >= t * r) throw std::invalid_argument("x exponent requires s < t*r (the count is 0 past it)");
    int x = static_cast<int>((static_cast<std::int64_t>(t) * r - s + t - 2) / (t - 1)) - 1;
    return x;
}

std::int64_t turan_clique_count(std::int64_t m, int k, int q) {
    if (m < 0 || k < 0 || q < 0) throw std::invalid_argument("turan_clique_count arguments must be nonnegative");
    if (q == 0) return 1;
    if (k == 0) return q == 1 ? m : 0; // edgeless convention for T(m,0)
    if (m > INT32_MAX) throw OverflowError("turan order too large");
    auto sizes = turan_part_sizes(static_cast<int>(m), k);
    // elementary symmetric polynomial e_q of the part sizes
    std::vector<std::int64_t> e(static_cast<std::size_t>(q) + 1, 0);
    e[0] = 1;
    for (int c : sizes)
        for (int j = std::min<int>(q, static_cast<int>(sizes.size())); j >= 1; --j)
            e[static_cast<std::size_t>(j)] =
                checked_add(e[static_cast<std::size_t>(j)], checked_mul(e[static_cast<std::size_t>(j - 1)], c));
    return e[static_cast<std::size_t>(q)];
}

std::int64_t ex_closed_value(const ProblemParams& params) {
    params.validate();
    if (params.p != 2) throw std::invalid_argument("closed values are available for p = 2 only");
    const int s = params.s, r = params.r, t = params.t;
    const std::int64_t n = params.n;
    if (s >= static_cast<std::int64_t>(t) * r) return 0;       // every K_s contains tK_r
    if (t == 1) return turan_clique_count(n, r - 1, s);        // Zykov
    const int x = s < r ? r - 1 : x_exponent(s, r, t);
    const std::int64_t a = static_cast<std::int64_t>(t) * (r - x) - 1;
    if (n <= a) return binomial(n, s); // K_n itself is tK_r-free below the apex size
    if (x == 0) return binomial(a, s); // apex plus isolated vertices
    std::int64_t total = 0;
    for (int j = 0; j <= s; ++j) {
        std::int64_t apex_ways = binomial(a, s - j);
        if (apex_ways == 0) continue;
        total = checked_add(total, checked_mul(apex_ways, turan_clique_count(n - a, x, j)));
    }
    return total;
}

std::int64_t lemma_hgt_value(int s, int r, int t) {
    if (t < 1 || r < 2) throw std::invalid_argument("lemma requires t >= 1 and r >= 2");
    if (s <= t * (r - 1)) throw std::invalid_argument("lemma requires s > t(r-1)");
    return binomial(static_cast<std::int64_t>(t) * r - 1, s);
}

ConstructionSpec extremal_construction_spec(const ProblemParams& params, const TailSupplier& tail_supplier) {
    params.validate();
    const int s = params.s, r = params.r, t = params.t, p = params.p;
    const int x = x_exponent(s, r, t); // enforces t >= 2 and r <= s < tr
    const std::int64_t a = static_cast<std::int64_t>(t) * (r - x) - 1;
    if (params.n < a)
        throw std::invalid_argument("n too small: the construction needs at least t(r-x)-1 vertices");
    const int m = static_cast<int>(params.n - a);

    ConstructionSpec spec;
    spec.apex = static_cast<int>(a);
    spec.p = p;
    spec.join_tail = x >= 1;
    if (p == 2) {
        spec.tail = TuranTail{m, x};
        return spec;
    }
    if (x == 0) {
        spec.tail = SuppliedTail{Hypergraph(m, p)};
        return spec;
    }
    if (!tail_supplier) throw std::invalid_argument("tail supplier required for p >= 3");
    Hypergraph tail = tail_supplier(m, x, p);
    if (tail.n != m) throw std::invalid_argument("supplied tail has the wrong order");
    if (tail.p != p) throw std::invalid_argument("supplied tail has the wrong uniformity");
    if (count_cliques(tail, x + 1) != 0)
        throw std::invalid_argument("supplied tail is not K_{x+1}^p-free");
    spec.tail = SuppliedTail{std::move(tail)};
    return spec;
}

namespace {

void assert_construction_free(const Hypergraph& h, int t, int r) {
    if (h.n > 40 || (h.p >= 3 && h.n > 16)) return; // asserted at desk scale only
    if (contains_disjoint_cliques(h, t, r))
        throw std::logic_error("extremal construction unexpectedly contains tK_r^p");
}

} // namespace

Graph extremal_construction_graph(const ProblemParams& params) {
    if (params.p != 2) throw std::invalid_argument("graph construction requires p = 2");
    ConstructionSpec spec = extremal_construction_spec(params);
    Graph g = spec.realize_graph();
    if (g.order() <= 40 && contains_disjoint_cliques(g, params.t, params.r))
        throw std::logic_error("extremal construction unexpectedly contains tK_r");
    return g;
}

Hypergraph extremal_construction(const ProblemParams& params, const TailSupplier& tail_supplier) {
    ConstructionSpec spec = extremal_construction_spec(params, tail_supplier);
    Hypergraph h = spec.realize();
    assert_construction_free(h, params.t, params.r);
    return h;
}

Hypergraph delete_vertices(const Hypergraph& h, VertexMask d) {
    if (d & ~full_mask(h.n)) throw std::invalid_argument("deletion set not within vertex set");
    std::vector<int> new_index(static_cast<std::size_t>(h.n), -1);
    int next = 0;
    for (int v = 0; v < h.n; ++v)
        if (!(d & bit(v))) new_index[static_cast<std::size_t>(v)] = next++;
    Hypergraph r(next, h.p);
    for (VertexMask e : h.edges) {
        if (e & d) continue;
        VertexMask ne = 0;
        for_each_vertex(e, [&](int v) { ne |= bit(new_index[static_cast<std::size_t>(v)]); });
        r.edges.push_back(ne);
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

namespace {

// Counts copies of `pattern` inside `host` whose image contains the vertex
// set `required_v` and whose edge image covers `required_edges` (given as
// host vertex pairs). Division by |Aut(pattern)| is exact because both
// conditions depend only on the image subgraph.
struct AnchoredCopyDFS {
    const Graph& host;
    int k;
    std::vector<VertexMask> adj_before; // per position
    std::vector<VertexMask> pos_adj;    // pattern adjacency between positions
    VertexMask required_v;
    int required_count;
    std::vector<std::pair<int, int>> required_edges;

    std::vector<int> assign;
    std::vector<int> inv;
    std::int64_t leaves = 0;

    void rec(int level, VertexMask used, int covered) {
        if (required_count - covered > k - level) return;
        if (level == k) {
            for (auto [a, b] : required_edges) {
                int ia = inv[static_cast<std::size_t>(a)], ib = inv[static_cast<std::size_t>(b)];
                if (ia < 0 || ib < 0 || !(pos_adj[static_cast<std::size_t>(ia)] & bit(ib))) return;
            }
            ++leaves;
            return;
        }
        for (int v = 0; v < host.order(); ++v) {
            if (used & bit(v)) continue;
            bool ok = true;
            VertexMask req = adj_before[static_cast<std::size_t>(level)];
            while (ok && req) {
                int p = lowest_vertex(req);
                req &= req - 1;
                ok = host.has_edge(assign[static_cast<std::size_t>(p)], v);
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(level)] = v;
            inv[static_cast<std::size_t>(v)] = level;
            rec(level + 1, used | bit(v), covered + ((required_v >> v) & 1 ? 1 : 0));
            inv[static_cast<std::size_t>(v)] = -1;
        }
    }
};

std::int64_t anchored_copy_count(const Hypergraph& pattern, const Graph& host, VertexMask required_v,
                                 const std::vector<std::pair<int, int>>& required_edges, std::int64_t aut) {
    const int k = pattern.n;
    std::vector<int> deg(static_cast<std::size_t>(k), 0);
    for (VertexMask e : pattern.edges) for_each_vertex(e, [&](int v) { ++deg[static_cast<std::size_t>(v)]; });
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    AnchoredCopyDFS dfs{host,
                        k,
                        std::vector<VertexMask>(static_cast<std::size_t>(std::max(1, k)), 0),
                        std::vector<VertexMask>(static_cast<std::size_t>(std::max(1, k)), 0),
                        required_v,
                        popcount(required_v),
                        required_edges,
                        std::vector<int>(static_cast<std::size_t>(std::max(1, k))),
                        std::vector<int>(static_cast<std::size_t>(host.order()), -1),
                        0};
    for (VertexMask e : pattern.edges) {
        int u = lowest_vertex(e), v = lowest_vertex(e & (e - 1));
        int pu = pos[static_cast<std::size_t>(u)], pv = pos[static_cast<std::size_t>(v)];
        dfs.pos_adj[static_cast<std::size_t>(pu)] |= bit(pv);
        dfs.pos_adj[static_cast<std::size_t>(pv)] |= bit(pu);
        dfs.adj_before[static_cast<std::size_t>(std::max(pu, pv))] |= bit(std::min(pu, pv));
    }
    dfs.rec(0, 0, 0);
    if (dfs.leaves % aut != 0) throw std::logic_error("anchored map count not divisible by automorphism count");
    return dfs.leaves / aut;
}

} // namespace

AlphaTable alpha_coefficients(const Hypergraph& h, int t) {
    if (h.p != 2) throw std::invalid_argument("alpha coefficients are defined for p = 2");
    if (h.n > 10) throw GuardError("patterns are capped at 10 vertices");
    if (t < 2) throw std::invalid_argument("alpha coefficients require t >= 2");
    h.validate();

    AlphaTable table{h, t, {}};
    const std::int64_t aut = automorphism_count(h);
    const int dmax = std::min(t - 1, h.n);
    for (int d = 0; d <= dmax; ++d) {
        for_each_ksubset_lex(h.n, d, [&](VertexMask dset) {
            Hypergraph hi = delete_vertices(h, dset);
            for (auto& entry : table.entries) {
                if (entry.subgraph.n == hi.n && isomorphic(entry.subgraph, hi)) {
                    ++entry.deletion_sets;
                    return;
                }
            }
            Graph joined = join(hypergraph_to_graph(hi), Graph::complete(t - 1));
            std::vector<std::pair<int, int>> required;
            for (VertexMask e : hi.edges)
                required.emplace_back(lowest_vertex(e), lowest_vertex(e & (e - 1)));
            std::int64_t alpha = anchored_copy_count(h, joined, full_mask(hi.n), required, aut);
            table.entries.push_back({std::move(hi), alpha, d, 1});
        });
    }
    return table;
}

std::int64_t reduced_objective(const AlphaTable& table, const Graph& g) {
    std::int64_t total = 0;
    for (const auto& entry : table.entries) {
        CopyCounter counter(entry.subgraph);
        total = checked_add(total, checked_mul(entry.alpha, counter.count(g)));
    }
    return total;
}

std::int64_t reduced_objective(const Hypergraph& h, int t, const Graph& g) {
    return reduced_objective(alpha_coefficients(h, t), g);
}

} // namespace turanpack
