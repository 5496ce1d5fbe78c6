#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvis {

// Distance value for vertices that cannot be reached.
inline constexpr int kUnreachable = -1;

using Edge = std::pair<int, int>;

// Immutable simple undirected graph in compressed sparse row form.
// Vertices are 0..n-1, neighbour lists are strictly increasing.
class Graph {
public:
    Graph() = default;

    // Rejects out-of-range endpoints, self loops and duplicate edges.
    static Graph from_edge_list(int vertex_count, std::span<const Edge> edges);
    static Graph from_edge_list(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;
    int max_degree() const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> adj_;

    void check_vertex(int v) const;
};

// Subset of vertices with O(1) membership, kept alongside its universe size.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(int universe);
    static PointSet from_members(int universe, std::span<const int> members);
    static PointSet from_members(int universe, const std::vector<int>& members);

    int universe() const { return universe_; }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    std::vector<int> members() const;

    bool operator==(const PointSet& other) const = default;

private:
    int universe_ = 0;
    int size_ = 0;
    std::vector<std::uint64_t> words_;

    void check_vertex(int v) const;
};

// Orders sets by their sorted member lists.
bool lex_less(const PointSet& a, const PointSet& b);

struct InducedSubgraph {
    Graph graph;
    // vertices[new_id] = old_id, ascending.
    std::vector<int> vertices;
};

struct BlockDecomposition {
    // Vertex sets of the biconnected components, each sorted ascending.
    std::vector<std::vector<int>> blocks;
    PointSet articulation;
};

enum class TwinKind { open, closed };

struct TwinPair {
    int u = 0;
    int v = 0;
    TwinKind kind = TwinKind::open;
    bool operator==(const TwinPair&) const = default;
};

struct TwinElimination {
    Graph graph;
    // kept[new_id] = old_id for the surviving vertices.
    std::vector<int> kept;
    // removed[i] was deleted as a twin of survivor_of[i], in elimination order.
    std::vector<int> removed;
    std::vector<int> survivor_of;
    std::vector<TwinKind> kinds;
};

std::vector<int> bfs_distances(const Graph& g, int source);

// Partition into connected components; each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

PointSet articulation_vertices(const Graph& g);
BlockDecomposition block_decomposition(const Graph& g);

// Every biconnected component is a clique.
bool is_block_graph(const Graph& g);

// Vertices on shortest u-v paths, endpoints included. Rejects unreachable pairs.
std::vector<int> geodesic_interval(const Graph& g, int u, int v);

// Least superset closed under shortest-path intervals. Rejects seeds that
// span several components.
std::vector<int> convex_hull(const Graph& g, std::span<const int> seed);
std::vector<int> convex_hull(const Graph& g, const std::vector<int>& seed);
bool is_convex(const Graph& g, std::span<const int> vertex_set);
bool is_convex(const Graph& g, const std::vector<int>& vertex_set);

// All twin pairs of the graph, sorted by (u, v).
std::vector<TwinPair> find_twins(const Graph& g);

// Repeatedly removes the lower vertex of the lexicographically least twin
// pair until no twins remain.
TwinElimination twin_free_subgraph(const Graph& g);

// Connected input only: true when twin elimination reaches a single vertex.
bool is_cograph(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// perm[old_id] = new_id must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace mvis
