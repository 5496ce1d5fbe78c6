#pragma once

#include <optional>
#include <string>

#include "mvis/graph.hpp"

namespace mvis {

enum class GraphClass {
    edgeless,
    complete,
    path,
    path_union,
    cycle,
    tree,
    block_graph,
    grid,
    complete_bipartite,
    join,
    cograph,
    all_but_one,
};

std::string to_string(GraphClass c);

struct ClassResult {
    int mu = 0;
    PointSet witness;
    GraphClass class_tag = GraphClass::edgeless;
};

// Which of the size characterizations hold. Several can hold at once.
struct CharReport {
    bool mu_is_one = false;          // no edges
    bool mu_is_two = false;          // components are paths, at least one edge
    bool mu_is_vertex_count = false; // complete
    bool mu_is_edge_count = false;   // connected, n > 2, star or triangle
};

CharReport classify(const Graph& g);

// Closed forms. Each witness is checked against the matching graph before it
// is returned; the check failing would be a construction bug.
ClassResult mu_path(int n);
ClassResult mu_cycle(int n);
ClassResult mu_tree(const Graph& g);
ClassResult mu_block_graph(const Graph& g);
ClassResult mu_grid(int m, int n);
ClassResult mu_complete_bipartite(int m, int n);

// A vertex whose closed neighbourhood lets all remaining vertices see each
// other in paths of length at most two, so V minus that vertex is mutually
// visible. Smallest such vertex, or nullopt.
std::optional<int> all_but_one_vertex(const Graph& g);

// Value and witness for the join of two nonempty graphs, laid out as in
// join_graphs.
ClassResult mu_join(const Graph& a, const Graph& b);

// Connected cograph: splits into a join by replaying twin elimination.
ClassResult mu_cograph(const Graph& g);

struct TorusFact {
    int m = 0;
    int n = 0;
    int bound = 0;  // three times the smaller dimension
    enum class Attained { yes, no, unknown } attained = Attained::unknown;
};

TorusFact mu_torus_bound(int m, int n);

// Structural dispatcher over the recognized families; nullopt when no closed
// form applies.
std::optional<ClassResult> mu_formula(const Graph& g);

}  // namespace mvis
