#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanpack/cover.hpp"

using namespace turanpack;

namespace {

SetFamily family_of(int n, int r, std::initializer_list<std::initializer_list<int>> sets) {
    SetFamily f{n, r, {}};
    for (auto s : sets) f.sets.push_back(vertices_to_mask(std::vector<int>(s)));
    return f;
}

SetFamily k3_edges() { return family_of(3, 2, {{0, 1}, {0, 2}, {1, 2}}); }

int brute_matching_number(const SetFamily& f) {
    int best = 0;
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << f.sets.size()); ++sel) {
        VertexMask used = 0;
        bool ok = true;
        int cnt = 0;
        for (std::size_t i = 0; ok && i < f.sets.size(); ++i)
            if (sel >> i & 1) {
                if (f.sets[i] & used) ok = false;
                used |= f.sets[i];
                ++cnt;
            }
        if (ok) best = std::max(best, cnt);
    }
    return best;
}

SetFamily random_family(std::mt19937_64& rng, int n, int r, int members) {
    SetFamily f{n, r, {}};
    std::vector<VertexMask> all;
    for_each_ksubset_lex(n, r, [&](VertexMask m) { all.push_back(m); });
    std::shuffle(all.begin(), all.end(), rng);
    for (int i = 0; i < members && i < static_cast<int>(all.size()); ++i) f.sets.push_back(all[static_cast<std::size_t>(i)]);
    return f;
}

} // namespace

TEST_CASE("matching number") {
    CHECK(matching_number(k3_edges(), 3) == 1);
    SetFamily pm = family_of(8, 2, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    CHECK(matching_number(pm, 3) == 3); // capped
    CHECK(matching_number(pm, 8) == 4);
    SetFamily tri5{5, 3, {}};
    for_each_ksubset_lex(5, 3, [&](VertexMask m) { tri5.sets.push_back(m); });
    CHECK(matching_number(tri5, 2) == 1);
}

TEST_CASE("matching number matches brute force") {
    std::mt19937_64 rng(89);
    for (int it = 0; it < 60; ++it) {
        int r = 2 + static_cast<int>(rng() % 2);
        int n = r + 2 + static_cast<int>(rng() % 7);
        SetFamily f = random_family(rng, n, r, 1 + static_cast<int>(rng() % 13));
        CHECK(matching_number(f, 14) == brute_matching_number(f));
    }
}

TEST_CASE("verify cover examples") {
    CHECK(verify_cover(k3_edges(), 2, {bit(0), 0b111}));
    CHECK_FALSE(verify_cover(k3_edges(), 2, {0, bit(0)}));
    SetFamily star = family_of(4, 2, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(verify_cover(star, 2, {bit(0), 0}));
}

TEST_CASE("cover decomposition traces") {
    // star: the u-sequence finds the hub and every member hits it
    SetFamily star = family_of(4, 2, {{0, 1}, {0, 2}, {0, 3}});
    CoverPair sp = cover_decomposition(star, 2);
    CHECK(sp.a == bit(0));
    CHECK(sp.b == 0);

    // triangle: the avoider {1,2} forces the fallback B = H_1 u H_1' u H;
    // with t = 2 the A part is empty (the spec's worked example keeps u_1 in
    // A, which would break the |A| = t-1 => B empty output invariant)
    CoverPair tp = cover_decomposition(k3_edges(), 2);
    CHECK(tp.a == 0);
    CHECK(tp.b == 0b111);
    CHECK(verify_cover(k3_edges(), 2, tp));

    // two disjoint members at t = 3: every member meets the packing union
    // twice, so the first exit fires
    SetFamily two = family_of(6, 3, {{0, 1, 2}, {3, 4, 5}});
    CoverPair dp = cover_decomposition(two, 3);
    CHECK(verify_cover(two, 3, dp));
    CHECK(popcount(dp.a) <= 2);

    // empty family
    CoverPair ep = cover_decomposition(SetFamily{5, 2, {}}, 2);
    CHECK(ep.a == 0);
    CHECK(ep.b == 0);
}

TEST_CASE("precondition violation returns the packing as witness") {
    SetFamily pm = family_of(6, 2, {{0, 1}, {2, 3}, {4, 5}});
    try {
        cover_decomposition(pm, 2);
        FAIL("expected PackingWitnessError");
    } catch (const PackingWitnessError& e) {
        REQUIRE(e.packing().size() >= 2);
        CHECK((e.packing()[0] & e.packing()[1]) == 0);
    }
}

TEST_CASE("cover property suite") {
    std::mt19937_64 rng(97);
    int checked = 0;
    while (checked < 300) {
        int r = 2 + static_cast<int>(rng() % 2);
        int t = 2 + static_cast<int>(rng() % 2);
        int n = r + 1 + static_cast<int>(rng() % (12 - r));
        SetFamily f = random_family(rng, n, r, 1 + static_cast<int>(rng() % 14));
        if (matching_number(f, t) >= t) continue;
        ++checked;
        CoverPair pair = cover_decomposition(f, t);
        CHECK(verify_cover(f, t, pair));
        CHECK(popcount(pair.a) <= t - 1);
        CHECK(popcount(pair.b) <= static_cast<std::int64_t>(f.r) * (2 * t - 2));
        if (popcount(pair.a) == t - 1) CHECK(pair.b == 0);
    }
}

TEST_CASE("rainbow matchings") {
    SetFamily m = family_of(4, 2, {{0, 1}, {2, 3}});
    auto hit = rainbow_matching({m, m}, 2);
    REQUIRE(hit.has_value());
    CHECK(hit->size() == 2);
    CHECK((*hit)[0].first != (*hit)[1].first);
    CHECK(((*hit)[0].second & (*hit)[1].second) == 0);

    SetFamily m1 = family_of(4, 2, {{0, 1}, {2, 3}});
    SetFamily m2 = family_of(4, 2, {{0, 2}, {1, 3}});
    CHECK_FALSE(rainbow_matching({m1, m2}, 2).has_value());

    CHECK_FALSE(rainbow_matching({m}, 2).has_value()); // needs two distinct matchings

    SetFamily not_matching = family_of(4, 2, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(rainbow_matching({not_matching}, 1), std::invalid_argument);
}

TEST_CASE("rainbow matching matches brute force") {
    std::mt19937_64 rng(101);
    auto brute = [](const std::vector<SetFamily>& ms, int t) {
        // all ways to pick t distinct matchings and one member from each
        std::vector<int> idx(ms.size());
        std::function<bool(std::size_t, int, VertexMask)> rec = [&](std::size_t i, int left, VertexMask used) {
            if (left == 0) return true;
            if (i >= ms.size()) return false;
            if (rec(i + 1, left, used)) return true;
            for (VertexMask s : ms[i].sets)
                if (!(s & used) && rec(i + 1, left - 1, used | s)) return true;
            return false;
        };
        return rec(0, t, 0);
    };
    for (int it = 0; it < 40; ++it) {
        int k = 1 + static_cast<int>(rng() % 6);
        int t = 1 + static_cast<int>(rng() % 3);
        std::vector<SetFamily> ms;
        for (int i = 0; i < k; ++i) {
            SetFamily m{10, 2, {}};
            VertexMask used = 0;
            int sz = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < sz; ++j) {
                int a = static_cast<int>(rng() % 10), b = static_cast<int>(rng() % 10);
                if (a == b) continue;
                VertexMask e = bit(a) | bit(b);
                if (e & used) continue;
                used |= e;
                m.sets.push_back(e);
            }
            ms.push_back(std::move(m));
        }
        CHECK(rainbow_matching(ms, t).has_value() == brute(ms, t));
    }
}
