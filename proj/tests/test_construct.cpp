#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanpack/canonical.hpp"
#include "turanpack/construct.hpp"
#include "turanpack/counting.hpp"

using namespace turanpack;

TEST_CASE("turan graph part structure") {
    Graph t63 = make_turan(6, 3);
    CHECK(t63.edge_count() == 12);
    // parts {0,1},{2,3},{4,5}
    CHECK_FALSE(t63.has_edge(0, 1));
    CHECK_FALSE(t63.has_edge(2, 3));
    CHECK_FALSE(t63.has_edge(4, 5));
    CHECK(t63.has_edge(0, 2));

    Graph t52 = make_turan(5, 2);
    CHECK(t52.edge_count() == 6);
    CHECK(turan_part_sizes(5, 2) == std::vector<int>{3, 2});

    CHECK(make_turan(4, 4) == Graph::complete(4));
    CHECK(make_turan(7, 0).edge_count() == 0);
    CHECK(make_turan(7, 0).order() == 7);
    CHECK(make_turan(3, 9) == Graph::complete(3)); // singleton parts only
}

TEST_CASE("turan graphs are K_{k+1}-free") {
    // k = 0 is excluded: T(m,0) is edgeless on m vertices, so it still has
    // K_1 copies; the freeness claim starts at k = 1.
    for (int m = 1; m <= 18; ++m)
        for (int k = 1; k <= m; ++k) CHECK(count_cliques(make_turan(m, k), k + 1) == 0);
    for (int m = 19; m <= 40; ++m)
        for (int k = 1; k <= 5; ++k) CHECK(count_cliques(make_turan(m, k), k + 1) == 0);
}

TEST_CASE("join basics") {
    Graph a = join(Graph::complete(1), make_turan(6, 2));
    CHECK(a.order() == 7);
    CHECK(a.edge_count() == 15);

    Graph g = testoracle::random_graph(*[] { static std::mt19937_64 r(1); return &r; }(), 9, 0.5);
    CHECK(join(Graph(0), g) == g);
    CHECK(join(Graph::complete(2), Graph::complete(2)) == Graph::complete(4));
}

TEST_CASE("join edge count identity") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
        Graph g1 = testoracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.4);
        Graph g2 = testoracle::random_graph(rng, static_cast<int>(rng() % 9), 0.6);
        Graph j = join(g1, g2);
        CHECK(j.edge_count() ==
              g1.edge_count() + g2.edge_count() + static_cast<std::int64_t>(g1.order()) * g2.order());
    }
}

TEST_CASE("hypergraph join") {
    Hypergraph k33 = Hypergraph::complete(3, 3);
    Hypergraph v1(1, 3);
    Hypergraph joined = hyper_join(v1, k33);
    CHECK(joined == Hypergraph::complete(4, 3));
    CHECK(joined.edge_count() == 4);

    Hypergraph h = testoracle::random_hypergraph(*[] { static std::mt19937_64 r(3); return &r; }(), 6, 3, 0.5);
    CHECK(hyper_join(h, Hypergraph(0, 3)) == h);

    Hypergraph single(1, 3);
    Hypergraph pair(2, 3);
    Hypergraph tri = hyper_join(single, pair);
    CHECK(tri.n == 3);
    REQUIRE(tri.edge_count() == 1);
    CHECK(tri.edges[0] == (bit(0) | bit(1) | bit(2)));

    CHECK_THROWS_AS(hyper_join(Hypergraph(2, 2), Hypergraph(2, 3)), std::invalid_argument);
}

TEST_CASE("hyper_join at p=2 agrees with graph join") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it) {
        Graph g1 = testoracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        Graph g2 = testoracle::random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
        CHECK(hyper_join(graph_to_hypergraph(g1), graph_to_hypergraph(g2)) ==
              graph_to_hypergraph(join(g1, g2)));
    }
}

TEST_CASE("partial blowup") {
    std::mt19937_64 rng(5);
    Hypergraph h = testoracle::random_hypergraph(rng, 6, 3, 0.4);
    CHECK(partial_blowup(h, 0, 4) == h);

    Hypergraph k2 = graph_to_hypergraph(Graph::complete(2));
    Hypergraph blown = partial_blowup(k2, 0b11, 2);
    CHECK(blown.n == 4);
    CHECK(blown.edge_count() == 4);
    // clone blocks: copies of 0 at {0,1}, copies of 1 at {2,3}
    for (VertexMask e : blown.edges) {
        CHECK(popcount(e & 0b0011) == 1);
        CHECK(popcount(e & 0b1100) == 1);
    }

    // K_3 with two vertices doubled: edge {0,1} -> 4 edges, the others 2 each
    Hypergraph k3 = graph_to_hypergraph(Graph::complete(3));
    Hypergraph b3 = partial_blowup(k3, 0b011, 2);
    CHECK(b3.n == 5);
    CHECK(b3.edge_count() == 8);
    CliqueFamily tris = list_cliques(b3, 3);
    CHECK(tris.sets.size() == 4);
    for (VertexMask tri : tris.sets) CHECK((tri & bit(0)) != 0); // all through the unblown vertex
}

TEST_CASE("partial blowup edge count identity") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        int p = 2 + static_cast<int>(rng() % 2);
        if (p > n) p = n;
        Hypergraph h = testoracle::random_hypergraph(rng, n, p, 0.6);
        VertexMask u = rng() & full_mask(n);
        int m = 1 + static_cast<int>(rng() % 3);
        Hypergraph blown = partial_blowup(h, u, m);
        std::int64_t expect = 0;
        for (VertexMask e : h.edges) {
            std::int64_t w = 1;
            for (int i = 0; i < popcount(e & u); ++i) w *= m;
            expect += w;
        }
        CHECK(blown.edge_count() == expect);
        CHECK(blown.n == h.n + (m - 1) * popcount(u));
    }
}

TEST_CASE("partial blowup with multiplicity 1 renumbers only") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 20; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        Hypergraph h = testoracle::random_hypergraph(rng, n, 2, 0.5);
        VertexMask u = rng() & full_mask(n);
        Hypergraph blown = partial_blowup(h, u, 1);
        CHECK(blown.n == h.n);
        CHECK(isomorphic(blown, h));
    }
}
