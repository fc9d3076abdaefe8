#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanpack/codec.hpp"

using namespace turanpack;

TEST_CASE("graph6 known encodings") {
    CHECK(to_graph6(Graph::complete(3)) == "Bw");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(from_graph6("Bw") == Graph::complete(3));
}

TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 1000; ++it) {
        int n = static_cast<int>(rng() % 31);
        Graph g = testoracle::random_graph(rng, n, 0.5);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 errors carry offsets") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    try {
        from_graph6(std::string(1, static_cast<char>(30)) + "w");
        FAIL("expected header error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 0);
    }
    try {
        from_graph6("Bww"); // trailing byte
        FAIL("expected trailing error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        from_graph6("B"); // truncated
        FAIL("expected truncation error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    // nonzero padding: K_2 is "A_" (bit then five zero pads)
    CHECK(to_graph6(Graph::complete(2)) == "A_");
    CHECK_THROWS_AS(from_graph6("A`"), ParseError);
    CHECK_THROWS_AS(from_graph6("~??"), ParseError); // long form unsupported
}

TEST_CASE("hypergraph json round trips") {
    std::string text = "{\"n\":3,\"p\":3,\"edges\":[[0,1,2]]}";
    Hypergraph h = from_hjson(text);
    CHECK(to_hjson(h) == text);

    std::mt19937_64 rng(29);
    for (int it = 0; it < 200; ++it) {
        int p = 2 + static_cast<int>(rng() % 3);
        int n = p + static_cast<int>(rng() % 6);
        Hypergraph g = testoracle::random_hypergraph(rng, n, p, 0.4);
        CHECK(from_hjson(to_hjson(g)) == g);
    }
}

TEST_CASE("hypergraph json errors") {
    CHECK_THROWS_AS(from_hjson("{\"n\":3,\"p\":2"), ParseError);      // malformed json
    CHECK_THROWS_AS(from_hjson("{\"n\":3,\"edges\":[]}"), ParseError); // missing key
    try {
        from_hjson("{\"n\":3,\"p\":2,\"edges\":[[0,1],[0,7]]}");
        FAIL("expected range error");
    } catch (const ParseError& e) {
        CHECK(e.offset() > 0); // points into the second edge
    }
    CHECK_THROWS_AS(from_hjson("{\"n\":3,\"p\":2,\"edges\":[[0,1],[0,1]]}"), ParseError); // duplicate
    CHECK_THROWS_AS(from_hjson("{\"n\":3,\"p\":2,\"edges\":[[1,0]]}"), ParseError);       // unsorted edge
    CHECK_THROWS_AS(from_hjson("{\"n\":3,\"p\":2,\"edges\":[[1,2],[0,1]]}"), ParseError); // unsorted list
    CHECK_THROWS_AS(from_hjson("{\"n\":3,\"p\":2,\"edges\":[[0,1,2]]}"), ParseError);     // arity
}

TEST_CASE("host text auto-detection") {
    Hypergraph a = parse_host_text("Bw");
    CHECK(a == graph_to_hypergraph(Graph::complete(3)));
    Hypergraph b = parse_host_text("  {\"n\":2,\"p\":2,\"edges\":[[0,1]]}");
    CHECK(b == graph_to_hypergraph(Graph::complete(2)));
}
