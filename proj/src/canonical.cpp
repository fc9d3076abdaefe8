#include "turanpack/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "turanpack/errors.hpp"

namespace turanpack {

SubsetCodec::SubsetCodec(int n, int p) : n_(n), p_(p) {
    if (n < 0 || n > 20) throw GuardError("subset codec supports n <= 20");
    for_each_ksubset_lex(n, p, [&](VertexMask m) { mask_of_.push_back(m); });
    rank_of_.assign(std::size_t{1} << n, -1);
    for (int r = 0; r < ranks(); ++r) rank_of_[mask_of_[static_cast<std::size_t>(r)]] = r;
}

std::uint64_t SubsetCodec::encode(const Hypergraph& h) const {
    if (ranks() > 64) throw GuardError("edge universe exceeds 64 slots");
    std::uint64_t code = 0;
    for (VertexMask e : h.edges) code |= std::uint64_t{1} << (ranks() - 1 - rank_of_[e]);
    return code;
}

Hypergraph SubsetCodec::decode(std::uint64_t code) const {
    Hypergraph h(n_, p_);
    for (int r = 0; r < ranks(); ++r)
        if (code >> (ranks() - 1 - r) & 1) h.edges.push_back(mask_of_[static_cast<std::size_t>(r)]);
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

std::uint64_t canonical_code(const Hypergraph& h, const SubsetCodec& codec) {
    if (h.n > 8) throw GuardError("canonical form supports at most 8 vertices");
    if (codec.ranks() > 64) throw GuardError("edge universe exceeds 64 slots");
    std::vector<int> perm(static_cast<std::size_t>(h.n));
    std::iota(perm.begin(), perm.end(), 0);
    const int R = codec.ranks();
    std::uint64_t best = 0;
    do {
        std::uint64_t code = 0;
        for (VertexMask e : h.edges) {
            VertexMask pe = 0;
            for_each_vertex(e, [&](int v) { pe |= bit(perm[static_cast<std::size_t>(v)]); });
            code |= std::uint64_t{1} << (R - 1 - codec.rank_of(pe));
        }
        best = std::max(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::uint64_t canonical_code(const Hypergraph& h) {
    SubsetCodec codec(h.n, h.p);
    return canonical_code(h, codec);
}

Hypergraph canonical_form(const Hypergraph& h) {
    SubsetCodec codec(h.n, h.p);
    return codec.decode(canonical_code(h, codec));
}

Graph canonical_form(const Graph& g) {
    return hypergraph_to_graph(canonical_form(graph_to_hypergraph(g)));
}

namespace {

struct IsoState {
    const Hypergraph* a;
    const Hypergraph* b;
    std::vector<std::vector<VertexMask>> sched; // a-edges whose max vertex is k
    std::vector<int> deg_a, deg_b;
    std::vector<int> map;
    VertexMask used = 0;

    bool extend(int k) {
        if (k == a->n) return true;
        for (int w = 0; w < b->n; ++w) {
            if (used & bit(w)) continue;
            if (deg_b[static_cast<std::size_t>(w)] != deg_a[static_cast<std::size_t>(k)]) continue;
            map[static_cast<std::size_t>(k)] = w;
            bool ok = true;
            for (VertexMask e : sched[static_cast<std::size_t>(k)]) {
                VertexMask img = 0;
                for_each_vertex(e, [&](int v) { img |= bit(map[static_cast<std::size_t>(v)]); });
                if (!b->has_edge(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used |= bit(w);
                if (extend(k + 1)) return true;
                used &= ~bit(w);
            }
        }
        return false;
    }
};

std::vector<int> degree_sequence(const Hypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.n), 0);
    for (VertexMask e : h.edges) for_each_vertex(e, [&](int v) { ++deg[static_cast<std::size_t>(v)]; });
    return deg;
}

} // namespace

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.n != b.n || a.p != b.p || a.edges.size() != b.edges.size()) return false;
    if (a.n > 10) throw GuardError("isomorphism test supports at most 10 vertices");
    IsoState st;
    st.a = &a;
    st.b = &b;
    st.deg_a = degree_sequence(a);
    st.deg_b = degree_sequence(b);
    auto sa = st.deg_a, sb = st.deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    st.sched.assign(static_cast<std::size_t>(a.n), {});
    for (VertexMask e : a.edges) st.sched[static_cast<std::size_t>(63 - std::countl_zero(e))].push_back(e);
    st.map.assign(static_cast<std::size_t>(a.n), -1);
    return st.extend(0);
}

} // namespace turanpack
