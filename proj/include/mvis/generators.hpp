#pragma once

#include <cstdint>

#include "mvis/graph.hpp"

namespace mvis {

// Deterministic splitmix64 stream, identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound);
    // Uniform draw from [lo, hi].
    int range(int lo, int hi);

private:
    std::uint64_t state_;
};

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Parts 0..m-1 and m..m+n-1.
Graph complete_bipartite_graph(int m, int n);

// Centre 0 with `leaves` leaf vertices.
Graph star_graph(int leaves);

// m rows by n columns, vertex (r, c) has id r * n + c.
Graph grid_graph(int m, int n);

// Same ids as grid_graph plus row and column wraparound; m, n >= 3.
Graph torus_graph(int m, int n);

// Disjoint copies plus all edges between them; b is shifted by a's size.
Graph join_graphs(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph random_tree(int n, std::uint64_t seed);

// Connected graph whose biconnected components are cliques.
Graph random_block_graph(int n, std::uint64_t seed);

// Connected cograph grown by repeated twin insertion.
Graph random_connected_cograph(int n, std::uint64_t seed);

// Each edge kept independently with probability percent/100.
Graph random_graph(int n, int percent, std::uint64_t seed);

}  // namespace mvis
