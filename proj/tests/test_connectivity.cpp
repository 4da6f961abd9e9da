#include <catch_amalgamated.hpp>
#include <random>

#include "cise/connectivity.hpp"
#include "cise/view.hpp"
#include "helpers.hpp"

using cise::BitMatrixView;
using cise::Graph;
using cise::ListView;
using cise::Vertex;

namespace {

// Definition-level reference: v is deletable iff the alive set minus v
// stays connected (and nonempty).
template <typename View>
std::vector<Vertex> non_articulation_by_definition(const Graph& g, View& view) {
    std::vector<Vertex> alive = view.alive_vertices();
    std::vector<Vertex> out;
    for (Vertex v : alive) {
        if (alive.size() == 1) {
            out.push_back(v);
            continue;
        }
        std::vector<Vertex> rest;
        for (Vertex u : alive)
            if (u != v) rest.push_back(u);
        if (cise::is_connected_subset(g, rest)) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("is_connected_subset on the nine-vertex sample") {
    Graph g = test::load_mtx(test::sample9_mtx());
    // labels {2,4,5} -> ids {1,3,4}: triangle
    REQUIRE(cise::is_connected_subset(g, {1, 3, 4}));
    // labels {1,8} -> ids {0,7}: no edge
    REQUIRE_FALSE(cise::is_connected_subset(g, {0, 7}));
    REQUIRE(cise::is_connected_subset(g, {5}));
    REQUIRE_FALSE(cise::is_connected_subset(g, {}));
    REQUIRE_THROWS_AS(cise::is_connected_subset(g, {99}), std::out_of_range);
}

TEST_CASE("connectivity checker is reusable across epochs") {
    Graph g = test::path_graph(6);
    cise::ConnectivityChecker c(g.n);
    REQUIRE(c.connected(g, {0, 1, 2}));
    REQUIRE_FALSE(c.connected(g, {0, 2}));
    REQUIRE(c.connected(g, {2, 3, 4, 5}));
    REQUIRE_FALSE(c.connected(g, {0, 1, 3}));
}

TEST_CASE("path graph articulation points") {
    Graph g = test::path_graph(5);
    ListView view(g);
    // only the endpoints of a path are deletable
    REQUIRE(cise::non_articulation_points(view) == std::vector<Vertex>{0, 4});
}

TEST_CASE("deleting and restoring a vertex leaves the finder reusable") {
    Graph g = test::load_mtx(test::sample9_mtx());
    ListView view(g);
    auto before = cise::non_articulation_points(view);
    // delete label 6 (id 5): 8 and 9 become degree-1 leaves
    view.delete_vertex(5);
    auto reduced = cise::non_articulation_points(view);
    REQUIRE(reduced == non_articulation_by_definition(g, view));
    view.restore_last();
    REQUIRE(cise::non_articulation_points(view) == before);
}

TEST_CASE("singleton view: the lone vertex is deletable") {
    Graph g = test::make_graph(1, {});
    ListView view(g);
    REQUIRE(cise::non_articulation_points(view) == std::vector<Vertex>{0});
}

TEST_CASE("list and bit-matrix backends agree with the definition") {
    std::mt19937 rng(20240815);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        double p = 0.2 + 0.1 * static_cast<double>(rng() % 6);
        Graph g = test::random_connected_graph(rng, n, p);

        ListView lv(g);
        BitMatrixView bv(g);
        auto expect = non_articulation_by_definition(g, lv);
        REQUIRE(cise::non_articulation_points(lv) == expect);
        REQUIRE(cise::non_articulation_points(bv) == expect);

        // knock out a random deletable vertex and re-check both backends
        if (!expect.empty() && g.n > 1) {
            Vertex v = expect[rng() % expect.size()];
            lv.delete_vertex(v);
            bv.delete_vertex(v);
            auto expect2 = non_articulation_by_definition(g, lv);
            REQUIRE(cise::non_articulation_points(lv) == expect2);
            REQUIRE(cise::non_articulation_points(bv) == expect2);
            lv.restore_last();
            bv.restore_last();
            REQUIRE(cise::non_articulation_points(lv) == expect);
            REQUIRE(cise::non_articulation_points(bv) == expect);
        }
    }
}

TEST_CASE("view deletion bookkeeping") {
    Graph g = test::sample4();
    BitMatrixView view(g);
    REQUIRE(view.alive_count() == 4);
    view.delete_vertex(1);
    REQUIRE(view.alive_count() == 3);
    REQUIRE_FALSE(view.alive(1));
    REQUIRE_FALSE(view.edge_bit(0, 1));
    REQUIRE_THROWS_AS(view.delete_vertex(1), std::logic_error);
    view.restore_last();
    REQUIRE(view.alive(1));
    REQUIRE(view.edge_bit(0, 1));
    REQUIRE_THROWS_AS(view.restore_last(), std::logic_error);
}
