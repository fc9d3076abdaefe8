#include "turanpack/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace turanpack {

void SetFamily::validate() const {
    if (n < 0 || n > 64) throw std::invalid_argument("ground set size must be in [0,64]");
    if (r < 1) throw std::invalid_argument("uniformity must be at least 1");
    VertexMask range = full_mask(n);
    for (VertexMask s : sets) {
        if (popcount(s) != r) throw std::invalid_argument("member does not have exactly r vertices");
        if (s & ~range) throw std::invalid_argument("member vertex out of range");
    }
    auto sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate member");
}

namespace {

// Members sorted by vertex-list lex order; disjoint selections are forced to
// use increasing indices, which kills permutation-equivalent matchings.
std::vector<VertexMask> lex_sorted(const std::vector<VertexMask>& sets) {
    std::vector<std::vector<int>> lists;
    lists.reserve(sets.size());
    for (VertexMask s : sets) lists.push_back(mask_to_vertices(s));
    std::sort(lists.begin(), lists.end());
    std::vector<VertexMask> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.push_back(vertices_to_mask(l));
    return out;
}

struct MatchingDFS {
    const std::vector<VertexMask>& sets;
    int cap;
    std::vector<VertexMask> best;
    std::vector<VertexMask> cur;

    bool rec(std::size_t idx, VertexMask used) {
        if (static_cast<int>(cur.size()) > static_cast<int>(best.size())) best = cur;
        if (static_cast<int>(cur.size()) == cap) return true;
        if (static_cast<int>(cur.size() + (sets.size() - idx)) <= static_cast<int>(best.size())) return false;
        for (std::size_t i = idx; i < sets.size(); ++i) {
            if (sets[i] & used) continue;
            cur.push_back(sets[i]);
            if (rec(i + 1, used | sets[i])) return true;
            cur.pop_back();
        }
        return false;
    }
};

// Lexicographically first matching of exactly `size` members, if any.
struct ExactMatchingDFS {
    const std::vector<VertexMask>& sets;
    int size;
    std::vector<VertexMask> cur;

    bool rec(std::size_t idx, VertexMask used) {
        if (static_cast<int>(cur.size()) == size) return true;
        if (static_cast<int>(cur.size() + (sets.size() - idx)) < size) return false;
        for (std::size_t i = idx; i < sets.size(); ++i) {
            if (sets[i] & used) continue;
            cur.push_back(sets[i]);
            if (rec(i + 1, used | sets[i])) return true;
            cur.pop_back();
        }
        return false;
    }
};

} // namespace

int matching_number(const SetFamily& f, int cap) {
    if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
    f.validate();
    auto sets = lex_sorted(f.sets);
    MatchingDFS dfs{sets, cap, {}, {}};
    dfs.rec(0, 0);
    return static_cast<int>(dfs.best.size());
}

std::vector<VertexMask> maximum_matching(const SetFamily& f, int cap) {
    int nu = matching_number(f, cap);
    auto sets = lex_sorted(f.sets);
    ExactMatchingDFS dfs{sets, nu, {}};
    dfs.rec(0, 0);
    return dfs.cur;
}

bool verify_cover(const SetFamily& f, int t, const CoverPair& pair) {
    if (popcount(pair.a) > t - 1) return false;
    if (popcount(pair.b) > static_cast<std::int64_t>(f.r) * (2 * t - 2)) return false;
    for (VertexMask s : f.sets)
        if (!(s & pair.a) && popcount(s & pair.b) < 2) return false;
    return true;
}

namespace {

// Exhaustive fallbacks for the avoider case; only exercised when the
// transcribed proof branch fails verification (see cover_decomposition).
std::optional<VertexMask> find_transversal(const SetFamily& f, int max_size) {
    VertexMask active = 0;
    for (VertexMask s : f.sets) active |= s;
    auto verts = mask_to_vertices(active);
    int na = static_cast<int>(verts.size());
    if (na > 24) return std::nullopt;
    for (int k = 0; k <= max_size; ++k) {
        std::optional<VertexMask> found;
        for_each_ksubset_lex(na, k, [&](VertexMask idxs) -> bool {
            VertexMask a = 0;
            for_each_vertex(idxs, [&](int i) { a |= bit(verts[static_cast<std::size_t>(i)]); });
            for (VertexMask s : f.sets)
                if (!(s & a)) return true;
            found = a;
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<CoverPair> search_small_a_cover(const SetFamily& f, int t) {
    VertexMask active = 0;
    for (VertexMask s : f.sets) active |= s;
    auto verts = mask_to_vertices(active);
    int na = static_cast<int>(verts.size());
    if (na > 20) return std::nullopt;
    std::int64_t bmax = static_cast<std::int64_t>(f.r) * (2 * t - 2);
    for (int ka = 0; ka <= t - 2; ++ka) {
        std::optional<CoverPair> found;
        for_each_ksubset_lex(na, ka, [&](VertexMask aidx) -> bool {
            VertexMask a = 0;
            for_each_vertex(aidx, [&](int i) { a |= bit(verts[static_cast<std::size_t>(i)]); });
            for (std::uint64_t bidx = 0; bidx < (std::uint64_t{1} << na); ++bidx) {
                if (popcount(bidx) > bmax) continue;
                VertexMask b = 0;
                for_each_vertex(bidx, [&](int i) { b |= bit(verts[static_cast<std::size_t>(i)]); });
                CoverPair pair{a, b};
                if (verify_cover(f, t, pair)) {
                    found = pair;
                    return false;
                }
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

} // namespace

CoverPair cover_decomposition(const SetFamily& f, int t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    f.validate();
    if (f.sets.empty()) return {0, 0};

    auto packing = maximum_matching(f, t);
    if (static_cast<int>(packing.size()) >= t) throw PackingWitnessError(std::move(packing));
    if (static_cast<int>(packing.size()) < t - 1) return cover_decomposition(f, t - 1);

    // nu = t-1: fix the packing H_0..H_{t-2} and grow the u-sequence.
    std::vector<VertexMask> H = packing;
    std::vector<VertexMask> primes;
    std::vector<int> us;
    VertexMask u_mask = 0;
    VertexMask unioned = 0;
    for (VertexMask s : H) unioned |= s;

    auto all_hit_u = [&]() {
        for (VertexMask s : f.sets)
            if (!(s & u_mask)) return false;
        return true;
    };

    const auto sorted_sets = lex_sorted(f.sets);
    for (int i = 0; i + 1 < t; ++i) {
        if (!us.empty() && all_hit_u()) return {u_mask, 0};
        // candidate: shares exactly one vertex with the accumulated union,
        // and that vertex is not an already chosen u
        VertexMask cand = 0;
        bool have = false;
        for (VertexMask s : sorted_sets) {
            VertexMask inter = s & unioned;
            if (popcount(inter) == 1 && !(inter & u_mask)) {
                cand = s;
                have = true;
                break;
            }
        }
        if (!have) return {u_mask, unioned}; // every member hits a u or meets the union twice
        int u = lowest_vertex(cand & unioned);
        // locate the packing member holding u; it cannot be an already
        // primed one, else the swap argument yields t disjoint members
        int j = -1;
        for (int k = 0; k < static_cast<int>(H.size()); ++k)
            if (H[static_cast<std::size_t>(k)] & bit(u)) {
                j = k;
                break;
            }
        if (j < 0 || j < i) throw std::logic_error("u-sequence invariant violated despite nu <= t-1");
        std::swap(H[static_cast<std::size_t>(i)], H[static_cast<std::size_t>(j)]);
        primes.push_back(cand);
        us.push_back(u);
        u_mask |= bit(u);
        unioned |= cand;
    }

    if (all_hit_u()) return {u_mask, 0}; // the moreover-clause exit

    // A member avoids every u_i; it meets both halves of some pair
    // (H_i, H'_i). Relabel that pair to the last slot and try the proof's
    // fallback cover.
    VertexMask avoider = 0;
    for (VertexMask s : sorted_sets)
        if (!(s & u_mask)) {
            avoider = s;
            break;
        }
    int pair_idx = -1;
    for (int k = 0; k < static_cast<int>(primes.size()); ++k)
        if ((avoider & H[static_cast<std::size_t>(k)]) && (avoider & primes[static_cast<std::size_t>(k)])) {
            pair_idx = k;
            break;
        }
    if (pair_idx >= 0) {
        VertexMask a_small = 0;
        for (int k = 0; k + 1 < t; ++k)
            if (k != pair_idx) a_small |= bit(us[static_cast<std::size_t>(k)]);
        CoverPair fallback{a_small,
                           H[static_cast<std::size_t>(pair_idx)] | primes[static_cast<std::size_t>(pair_idx)] | avoider};
        if (verify_cover(f, t, fallback)) return fallback;
    }

    // The transcribed fallback is not always a cover; realize the moreover
    // clause exactly instead: either some (t-1)-transversal exists (B empty)
    // or a cover with |A| <= t-2 does.
    if (auto tv = find_transversal(f, t - 1)) return {*tv, 0};
    if (auto small = search_small_a_cover(f, t)) return *small;
    return {u_mask, unioned}; // valid cover; reachable only if the moreover clause fails
}

std::optional<std::vector<std::pair<int, VertexMask>>> rainbow_matching(const std::vector<SetFamily>& matchings,
                                                                        int t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    for (const auto& m : matchings) {
        m.validate();
        VertexMask seen = 0;
        for (VertexMask s : m.sets) {
            if (s & seen) throw std::invalid_argument("input family is not a matching");
            seen |= s;
        }
    }

    std::vector<std::vector<VertexMask>> sorted;
    sorted.reserve(matchings.size());
    for (const auto& m : matchings) sorted.push_back(lex_sorted(m.sets));

    std::vector<std::pair<int, VertexMask>> picked;
    auto rec = [&](auto&& self, std::size_t idx, VertexMask used) -> bool {
        if (static_cast<int>(picked.size()) == t) return true;
        if (picked.size() + (matchings.size() - idx) < static_cast<std::size_t>(t)) return false;
        for (std::size_t i = idx; i < matchings.size(); ++i) {
            for (VertexMask s : sorted[i]) {
                if (s & used) continue;
                picked.emplace_back(static_cast<int>(i), s);
                if (self(self, i + 1, used | s)) return true;
                picked.pop_back();
            }
        }
        return false;
    };
    if (rec(rec, 0, 0)) return picked;
    return std::nullopt;
}

} // namespace turanpack
