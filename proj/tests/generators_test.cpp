#include <algorithm>
#include <set>

#include "doctest.h"
#include "mvis/generators.hpp"
#include "mvis/graph.hpp"

using namespace mvis;

TEST_CASE("fixed families have the right shape") {
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK(path_graph(1).vertex_count() == 1);
    CHECK(path_graph(6).edge_count() == 5);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(cycle_graph(8).edge_count() == 8);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(star_graph(7).max_degree() == 7);
    CHECK(star_graph(7).edge_count() == 7);
}

TEST_CASE("complete bipartite layout puts parts in id order") {
    Graph g = complete_bipartite_graph(2, 3);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(star_graph(4) == complete_bipartite_graph(1, 4));
}

TEST_CASE("grid ids follow row-major order") {
    Graph g = grid_graph(3, 4);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 3 * 3 + 2 * 4);  // horizontal + vertical
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(3, 4));  // row boundary
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(5) == 4);
}

TEST_CASE("torus wraps rows and columns") {
    Graph g = torus_graph(3, 4);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 24);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 4);
    CHECK(g.adjacent(0, 3));  // column wrap within row 0
    CHECK(g.adjacent(0, 8));  // row wrap within column 0
    CHECK_THROWS_AS(torus_graph(2, 5), std::invalid_argument);

    // A 3-by-3 torus double-counts no wrap edges.
    Graph t3 = torus_graph(3, 3);
    CHECK(t3.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(t3.degree(v) == 4);
}

TEST_CASE("join adds the full cross set") {
    Graph j = join_graphs(path_graph(2), path_graph(3));
    CHECK(j.vertex_count() == 5);
    CHECK(j.edge_count() == 1 + 2 + 6);
    CHECK(j.adjacent(0, 4));
    CHECK(j.adjacent(1, 2));
    CHECK(join_graphs(complete_graph(2), complete_graph(3)) == complete_graph(5));
}

TEST_CASE("disjoint union shifts the second operand") {
    Graph u = disjoint_union(path_graph(2), cycle_graph(3));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(2, 4));
    CHECK_FALSE(u.adjacent(1, 2));
}

TEST_CASE("random generators are deterministic in the seed") {
    CHECK(random_tree(12, 5) == random_tree(12, 5));
    CHECK_FALSE(random_tree(12, 5) == random_tree(12, 6));
    CHECK(random_block_graph(14, 9) == random_block_graph(14, 9));
    CHECK(random_connected_cograph(13, 2) == random_connected_cograph(13, 2));
    CHECK(random_graph(10, 30, 4) == random_graph(10, 30, 4));
}

TEST_CASE("random trees are trees") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_tree(10, seed);
        CHECK(g.edge_count() == 9);
        CHECK(is_connected(g));
    }
}

TEST_CASE("random block graphs are connected block graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_block_graph(12, seed);
        CHECK(g.vertex_count() == 12);
        CHECK(is_connected(g));
        CHECK(is_block_graph(g));
    }
}

TEST_CASE("random cographs are connected cographs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_connected_cograph(12, seed);
        CHECK(g.vertex_count() == 12);
        CHECK(is_connected(g));
        CHECK(is_cograph(g));
    }
}

TEST_CASE("edge probability drives density") {
    CHECK(random_graph(9, 0, 1).edge_count() == 0);
    CHECK(random_graph(9, 100, 1) == complete_graph(9));
    int sparse = random_graph(40, 10, 3).edge_count();
    int dense = random_graph(40, 80, 3).edge_count();
    CHECK(sparse < dense);
}

TEST_CASE("rng draws stay in range") {
    Rng rng(123);
    std::set<int> seen;
    for (int i = 0; i < 200; ++i) {
        int v = rng.range(3, 7);
        CHECK(v >= 3);
        CHECK(v <= 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);
    for (int i = 0; i < 50; ++i) CHECK(rng.below(1) == 0);
}
