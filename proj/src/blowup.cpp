#include "turanpack/blowup.hpp"

#include <unordered_map>

#include "turanpack/construct.hpp"
#include "turanpack/counting.hpp"
#include "turanpack/errors.hpp"

namespace turanpack {

namespace {

struct HypergraphKey {
    int n;
    int p;
    std::vector<VertexMask> edges;
    bool operator==(const HypergraphKey&) const = default;
};

struct HypergraphKeyHash {
    std::size_t operator()(const HypergraphKey& k) const {
        std::size_t h = std::hash<int>{}(k.n) * 31 + static_cast<std::size_t>(k.p);
        for (VertexMask e : k.edges) h = h * 1099511628211ULL + e;
        return h;
    }
};

} // namespace

std::pair<int, BlowupCertificate> b_parameter(const Hypergraph& h, int t, int r, int multiplicity) {
    if (h.n > 10) throw GuardError("patterns are capped at 10 vertices");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (r < h.p) throw std::invalid_argument("r must be at least the uniformity");
    const int m = multiplicity > 0 ? multiplicity : t;

    // Same-size subsets of a symmetric pattern blow up to identical
    // normalized hypergraphs, so containment results are memoized on the
    // sorted edge list after vertex normalization.
    std::unordered_map<HypergraphKey, PackingSearch, HypergraphKeyHash> memo;
    auto check = [&](VertexMask u) -> const PackingSearch& {
        Hypergraph blown = partial_blowup(h, u, m);
        HypergraphKey key{blown.n, blown.p, blown.edges};
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(std::move(key), find_disjoint_cliques(blown, t, r)).first;
        return it->second;
    };

    BlowupCertificate cert;
    cert.multiplicity = m;
    std::vector<BlowupFailure> level_failures;
    for (int k = h.n; k >= 0; --k) {
        level_failures.clear();
        VertexMask found = 0;
        bool ok = false;
        for_each_ksubset_lex(h.n, k, [&](VertexMask u) -> bool {
            const PackingSearch& res = check(u);
            if (!res.found) {
                found = u;
                ok = true;
                return false; // lexicographically smallest feasible set
            }
            level_failures.push_back({u, res.witness});
            return true;
        });
        if (ok) {
            cert.b = k;
            cert.chosen_u = found;
            return {k, cert};
        }
        cert.failures = level_failures; // witnesses for size k; final value holds size b+1
    }
    cert.b = -1;
    cert.forbidden_saturated = true;
    return {-1, cert};
}

} // namespace turanpack
