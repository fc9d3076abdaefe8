#include "turanpack/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace turanpack {

std::vector<int> turan_part_sizes(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("turan parameters must be nonnegative");
    std::vector<int> sizes;
    if (k == 0) return sizes;
    int q = m / k, rem = m % k;
    for (int i = 0; i < k && (q > 0 || i < rem); ++i) sizes.push_back(i < rem ? q + 1 : q);
    return sizes;
}

Graph make_turan(int m, int k) {
    Graph g(m);
    auto sizes = turan_part_sizes(m, k);
    std::vector<int> part_of(m, -1);
    int v = 0, idx = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i) part_of[v++] = idx;
        ++idx;
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (part_of[a] != part_of[b]) g.add_edge(a, b);
    return g;
}

Graph join(const Graph& g, const Graph& g2) {
    int n1 = g.order(), n2 = g2.order();
    Graph r(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = u + 1; v < n1; ++v)
            if (g.has_edge(u, v)) r.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v = u + 1; v < n2; ++v)
            if (g2.has_edge(u, v)) r.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) r.add_edge(u, n1 + v);
    return r;
}

Graph disjoint_union(const Graph& g, const Graph& g2) {
    int n1 = g.order(), n2 = g2.order();
    Graph r(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = u + 1; v < n1; ++v)
            if (g.has_edge(u, v)) r.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v = u + 1; v < n2; ++v)
            if (g2.has_edge(u, v)) r.add_edge(n1 + u, n1 + v);
    return r;
}

Hypergraph hyper_union(const Hypergraph& h, const Hypergraph& h2) {
    if (h.p != h2.p) throw std::invalid_argument("uniformity mismatch");
    Hypergraph r(h.n + h2.n, h.p);
    r.edges = h.edges;
    for (VertexMask e : h2.edges) r.edges.push_back(e << h.n);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

Hypergraph hyper_join(const Hypergraph& h, const Hypergraph& h2) {
    Hypergraph r = hyper_union(h, h2);
    VertexMask left = full_mask(h.n);
    VertexMask right = full_mask(r.n) & ~left;
    std::vector<VertexMask> crossing;
    for_each_ksubset_lex(r.n, r.p, [&](VertexMask e) {
        if ((e & left) && (e & right)) crossing.push_back(e);
    });
    r.edges.insert(r.edges.end(), crossing.begin(), crossing.end());
    std::sort(r.edges.begin(), r.edges.end());
    r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
    return r;
}

std::vector<int> blowup_index_of_original(int n, VertexMask u_set, int multiplicity) {
    std::vector<int> index_of(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!(u_set & bit(v))) index_of[v] = next++;
    for (int v = 0; v < n; ++v)
        if (u_set & bit(v)) {
            index_of[v] = next; // start of the clone block
            next += multiplicity;
        }
    return index_of;
}

Hypergraph partial_blowup(const Hypergraph& h, VertexMask u_set, int multiplicity) {
    if (multiplicity < 1) throw std::invalid_argument("blowup multiplicity must be at least 1");
    if (u_set & ~full_mask(h.n)) throw std::invalid_argument("blowup set not within vertex set");
    int u_count = popcount(u_set);
    int new_n = h.n + (multiplicity - 1) * u_count;
    if (new_n > 64) throw GuardError("partial blowup exceeds 64 vertices");
    Hypergraph r(new_n, h.p);
    auto index_of = blowup_index_of_original(h.n, u_set, multiplicity);

    std::vector<int> blown; // original vertices of the current edge inside U
    for (VertexMask e : h.edges) {
        VertexMask fixed = 0;
        blown.clear();
        for_each_vertex(e, [&](int v) {
            if (u_set & bit(v)) blown.push_back(v);
            else fixed |= bit(index_of[v]);
        });
        int q = static_cast<int>(blown.size());
        std::vector<int> choice(static_cast<std::size_t>(q), 0);
        while (true) {
            VertexMask ne = fixed;
            for (int i = 0; i < q; ++i) ne |= bit(index_of[blown[static_cast<std::size_t>(i)]] + choice[static_cast<std::size_t>(i)]);
            r.edges.push_back(ne);
            int i = q - 1;
            while (i >= 0 && choice[static_cast<std::size_t>(i)] == multiplicity - 1) --i;
            if (i < 0) break;
            ++choice[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < q; ++j) choice[static_cast<std::size_t>(j)] = 0;
        }
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

int ConstructionSpec::tail_order() const {
    if (std::holds_alternative<TuranTail>(tail)) return std::get<TuranTail>(tail).m;
    return std::get<SuppliedTail>(tail).tail.n;
}

Graph ConstructionSpec::realize_graph() const {
    if (p != 2) throw std::invalid_argument("realize_graph requires p = 2");
    Graph apex_g = Graph::complete(apex);
    Graph tail_g;
    if (std::holds_alternative<TuranTail>(tail)) {
        const auto& t = std::get<TuranTail>(tail);
        tail_g = make_turan(t.m, t.x);
    } else {
        tail_g = hypergraph_to_graph(std::get<SuppliedTail>(tail).tail);
    }
    return join_tail ? join(apex_g, tail_g) : disjoint_union(apex_g, tail_g);
}

Hypergraph ConstructionSpec::realize() const {
    if (p == 2) return graph_to_hypergraph(realize_graph());
    Hypergraph apex_h = Hypergraph::complete(apex, p);
    if (std::holds_alternative<TuranTail>(tail)) throw std::invalid_argument("Turan tail requires p = 2");
    const Hypergraph& tail_h = std::get<SuppliedTail>(tail).tail;
    if (tail_h.p != p) throw std::invalid_argument("tail uniformity mismatch");
    return join_tail ? hyper_join(apex_h, tail_h) : hyper_union(apex_h, tail_h);
}

} // namespace turanpack
