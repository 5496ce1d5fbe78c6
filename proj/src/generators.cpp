#include "mvis/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mvis {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty draw range");
    // Rejection sampling keeps the draw unbiased.
    std::uint64_t threshold = (~bound + 1) % bound;
    while (true) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

int Rng::range(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty draw range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph empty_graph(int n) {
    require(n >= 0, "vertex count must be nonnegative");
    return Graph::from_edge_list(n, std::vector<Edge>{});
}

Graph path_graph(int n) {
    require(n >= 1, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    require(n >= 0, "vertex count must be nonnegative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
    require(m >= 1 && n >= 1, "both parts need at least one vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return Graph::from_edge_list(m + n, edges);
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph grid_graph(int m, int n) {
    require(m >= 1 && n >= 1, "grid needs positive dimensions");
    std::vector<Edge> edges;
    auto id = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < m) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edge_list(m * n, edges);
}

Graph torus_graph(int m, int n) {
    require(m >= 3 && n >= 3, "torus needs both dimensions at least three");
    std::vector<Edge> edges;
    auto id = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            int right = id(r, (c + 1) % n);
            int down = id((r + 1) % m, c);
            int self = id(r, c);
            edges.emplace_back(std::min(self, right), std::max(self, right));
            edges.emplace_back(std::min(self, down), std::max(self, down));
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edge_list(m * n, edges);
}

Graph join_graphs(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    int offset = a.vertex_count();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, offset + v);
    return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    int offset = a.vertex_count();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
    return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "tree needs at least one vertex");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        edges.emplace_back(parent, v);
    }
    return Graph::from_edge_list(n, edges);
}

Graph random_block_graph(int n, std::uint64_t seed) {
    require(n >= 1, "block graph needs at least one vertex");
    Rng rng(seed);
    std::vector<Edge> edges;
    int built = 1;
    while (built < n) {
        // Glue a clique of 2..4 vertices onto one existing vertex.
        int extra = std::min(rng.range(1, 3), n - built);
        int anchor = static_cast<int>(rng.below(static_cast<std::uint64_t>(built)));
        std::vector<int> clique{anchor};
        for (int i = 0; i < extra; ++i) clique.push_back(built++);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.emplace_back(std::min(clique[i], clique[j]), std::max(clique[i], clique[j]));
    }
    return Graph::from_edge_list(n, edges);
}

Graph random_connected_cograph(int n, std::uint64_t seed) {
    require(n >= 1, "cograph needs at least one vertex");
    Rng rng(seed);
    // Adjacency grown one twin at a time; the first twin is closed, which
    // keeps every later graph connected.
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int v = 1; v < n; ++v) {
        int of = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        bool closed = v == 1 ? true : rng.below(2) == 0;
        for (int u = 0; u < v; ++u)
            if (adj[of][u]) {
                adj[v][u] = adj[u][v] = true;
            }
        if (closed) adj[v][of] = adj[of][v] = true;
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph random_graph(int n, int percent, std::uint64_t seed) {
    require(n >= 0, "vertex count must be nonnegative");
    require(percent >= 0 && percent <= 100, "edge probability must be a percentage");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(percent)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

}  // namespace mvis
