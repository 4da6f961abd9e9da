#include <catch_amalgamated.hpp>

#include "cise/graph.hpp"
#include "helpers.hpp"

using cise::Graph;
using cise::InputFormat;
using cise::ParseError;
using cise::Vertex;

TEST_CASE("matrix market parsing of the nine-vertex sample") {
    Graph g = test::load_mtx(test::sample9_mtx());
    REQUIRE(g.n == 9);
    REQUIRE(g.m == 12);
    REQUIRE(g.labels.front() == "1");
    REQUIRE(g.labels.back() == "9");
    // label "2" is internal id 1; its neighbors are labels 1, 4, 5
    REQUIRE(g.neighbors(1) == std::vector<Vertex>{0, 3, 4});
    REQUIRE(g.has_edge(3, 4));
    REQUIRE_FALSE(g.has_edge(0, 8));
    REQUIRE(g.max_degree == 4);  // label 4: neighbors 2, 3, 5, 7
}

TEST_CASE("set neighborhood N(X)") {
    Graph g = test::load_mtx(test::sample9_mtx());
    // X = labels {2,4,5,7} -> ids {1,3,4,6}; N(X) = labels {1,3,8,9}
    REQUIRE(cise::set_neighbors(g, {1, 3, 4, 6}) == std::vector<Vertex>{0, 2, 7, 8});
    REQUIRE(cise::set_neighbors(g, {}).empty());
    REQUIRE_THROWS_AS(cise::set_neighbors(g, {42}), std::out_of_range);
}

TEST_CASE("single-percent MatrixMarket header is accepted") {
    Graph g = test::load_mtx(
        "%MatrixMarket matrix coordinate pattern symmetric \n"
        "3 3 2\n1 2\n2 3\n");
    REQUIRE(g.n == 3);
    REQUIRE(g.m == 2);
}

TEST_CASE("self-loops dropped, duplicate and mirrored edges collapsed") {
    Graph g = test::load_mtx(
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "3 3 5\n1 1\n1 2\n2 1\n1 2\n2 3\n");
    REQUIRE(g.n == 3);
    REQUIRE(g.m == 2);
    REQUIRE(g.neighbors(0) == std::vector<Vertex>{1});
}

TEST_CASE("matrix market rejects malformed input with line numbers") {
    SECTION("missing header") {
        REQUIRE_THROWS_AS(test::load_mtx("3 3 1\n1 2\n"), ParseError);
    }
    SECTION("index out of range") {
        try {
            test::load_mtx("%%MatrixMarket matrix coordinate pattern symmetric\n"
                           "2 2 1\n1 5\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line == 3);
        }
    }
    SECTION("malformed entry") {
        REQUIRE_THROWS_AS(
            test::load_mtx("%%MatrixMarket matrix coordinate pattern symmetric\n"
                           "2 2 1\nfoo bar\n"),
            ParseError);
    }
    SECTION("empty graph") {
        REQUIRE_THROWS(test::load_mtx("%%MatrixMarket matrix coordinate pattern symmetric\n"
                                      "0 0 0\n"));
    }
}

TEST_CASE("edge list parsing interns labels in first-appearance order") {
    Graph g = test::load_edges("# comment\nalpha beta\n% also comment\nbeta gamma 3.5\n"
                               "alpha alpha\n\n");
    REQUIRE(g.n == 3);
    REQUIRE(g.m == 2);  // self-loop alpha-alpha dropped
    REQUIRE(g.labels == std::vector<std::string>{"alpha", "beta", "gamma"});
    REQUIRE(g.neighbors(1) == std::vector<Vertex>{0, 2});
}

TEST_CASE("edge list rejects empty and one-token lines") {
    REQUIRE_THROWS(test::load_edges("# nothing\n"));
    REQUIRE_THROWS_AS(test::load_edges("a\n"), ParseError);
}

TEST_CASE("bit rows mirror the adjacency lists") {
    Graph g = test::load_mtx(test::sample9_mtx());
    g.build_bitrows();
    REQUIRE(g.has_bitrows());
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex u = 0; u < g.n; ++u)
            REQUIRE(cise::bit_test(g.bitrows[v], u) == g.has_edge(v, u));
}

TEST_CASE("neighbors bounds-checks its argument") {
    Graph g = test::sample4();
    REQUIRE_THROWS_AS(g.neighbors(-1), std::out_of_range);
    REQUIRE_THROWS_AS(g.neighbors(4), std::out_of_range);
}
