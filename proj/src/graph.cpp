#include "mvis/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mvis {

namespace {

std::string vertex_range_message(int v, int n) {
    return "vertex " + std::to_string(v) + " out of range for graph with " +
           std::to_string(n) + " vertices";
}

}  // namespace

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument(vertex_range_message(v, n_));
}

Graph Graph::from_edge_list(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = vertex_count;
    g.m_ = static_cast<int>(edges.size());
    std::vector<int> deg(vertex_count, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count) throw std::invalid_argument(vertex_range_message(u, vertex_count));
        if (v < 0 || v >= vertex_count) throw std::invalid_argument(vertex_range_message(v, vertex_count));
        if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(vertex_count + 1, 0);
    for (int v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * edges.size());
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < vertex_count; ++v) {
        auto begin = g.adj_.begin() + g.offsets_[v];
        auto end = g.adj_.begin() + g.offsets_[v + 1];
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end)
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

Graph Graph::from_edge_list(int vertex_count, const std::vector<Edge>& edges) {
    return from_edge_list(vertex_count, std::span<const Edge>(edges));
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
}

int Graph::degree(int v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

PointSet::PointSet(int universe) : universe_(universe) {
    if (universe < 0) throw std::invalid_argument("universe must be nonnegative");
    words_.assign((universe + 63) / 64, 0);
}

PointSet PointSet::from_members(int universe, std::span<const int> members) {
    PointSet s(universe);
    for (int v : members) {
        if (s.contains(v)) throw std::invalid_argument("duplicate member " + std::to_string(v));
        s.insert(v);
    }
    return s;
}

PointSet PointSet::from_members(int universe, const std::vector<int>& members) {
    return from_members(universe, std::span<const int>(members));
}

void PointSet::check_vertex(int v) const {
    if (v < 0 || v >= universe_) throw std::invalid_argument(vertex_range_message(v, universe_));
}

bool PointSet::contains(int v) const {
    check_vertex(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
}

void PointSet::insert(int v) {
    check_vertex(v);
    std::uint64_t& w = words_[v >> 6];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) {
        w |= bit;
        ++size_;
    }
}

void PointSet::erase(int v) {
    check_vertex(v);
    std::uint64_t& w = words_[v >> 6];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) {
        w &= ~bit;
        --size_;
    }
}

std::vector<int> PointSet::members() const {
    std::vector<int> out;
    out.reserve(size_);
    for (int v = 0; v < universe_; ++v)
        if ((words_[v >> 6] >> (v & 63)) & 1u) out.push_back(v);
    return out;
}

bool lex_less(const PointSet& a, const PointSet& b) {
    return a.members() < b.members();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument(vertex_range_message(source, g.vertex_count()));
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            out[id].push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

namespace {

// Iterative lowpoint computation shared by the articulation and block queries.
struct DepthFirstBlocks {
    const Graph& g;
    std::vector<int> disc, low, tree_children;
    std::vector<bool> articulation;
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit DepthFirstBlocks(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          tree_children(graph.vertex_count(), 0),
          articulation(graph.vertex_count(), false) {}

    void pop_block(int u, int v) {
        std::vector<int> verts;
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e.first == u && e.second == v) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    }

    void run() {
        struct Frame {
            int v;
            int parent;
            std::size_t next;
        };
        int n = g.vertex_count();
        std::vector<Frame> stack;
        for (int root = 0; root < n; ++root) {
            if (disc[root] != -1) continue;
            if (g.degree(root) == 0) {
                // Isolated vertices become singleton blocks so blocks cover V.
                disc[root] = timer++;
                blocks.push_back({root});
                continue;
            }
            stack.push_back({root, -1, 0});
            disc[root] = low[root] = timer++;
            while (!stack.empty()) {
                Frame& f = stack.back();
                auto nb = g.neighbors(f.v);
                if (f.next < nb.size()) {
                    int w = nb[f.next++];
                    if (w == f.parent) continue;
                    if (disc[w] == -1) {
                        edge_stack.emplace_back(f.v, w);
                        ++tree_children[f.v];
                        disc[w] = low[w] = timer++;
                        stack.push_back({w, f.v, 0});
                    } else if (disc[w] < disc[f.v]) {
                        edge_stack.emplace_back(f.v, w);
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                } else {
                    int v = f.v;
                    int parent = f.parent;
                    stack.pop_back();
                    if (parent == -1) {
                        articulation[v] = tree_children[v] >= 2;
                    } else {
                        low[parent] = std::min(low[parent], low[v]);
                        if (low[v] >= disc[parent]) {
                            pop_block(parent, v);
                            if (stack.back().parent != -1) articulation[parent] = true;
                        }
                    }
                }
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    DepthFirstBlocks dfb(g);
    dfb.run();
    BlockDecomposition out;
    out.blocks = std::move(dfb.blocks);
    std::sort(out.blocks.begin(), out.blocks.end());
    out.articulation = PointSet(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfb.articulation[v]) out.articulation.insert(v);
    return out;
}

PointSet articulation_vertices(const Graph& g) {
    return block_decomposition(g).articulation;
}

bool is_block_graph(const Graph& g) {
    for (const auto& block : block_decomposition(g).blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.adjacent(block[i], block[j])) return false;
    return true;
}

std::vector<int> geodesic_interval(const Graph& g, int u, int v) {
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    int d = du[v];
    if (d == kUnreachable)
        throw std::invalid_argument("vertices " + std::to_string(u) + " and " +
                                    std::to_string(v) + " lie in different components");
    std::vector<int> out;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (du[w] != kUnreachable && dv[w] != kUnreachable && du[w] + dv[w] == d)
            out.push_back(w);
    return out;
}

std::vector<int> convex_hull(const Graph& g, std::span<const int> seed) {
    int n = g.vertex_count();
    std::vector<bool> in_set(n, false);
    for (int v : seed) {
        if (v < 0 || v >= n) throw std::invalid_argument(vertex_range_message(v, n));
        in_set[v] = true;
    }
    std::vector<int> current;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) current.push_back(v);
    if (current.empty()) return {};
    auto reach = bfs_distances(g, current.front());
    for (int v : current)
        if (reach[v] == kUnreachable)
            throw std::invalid_argument("hull seed spans several components");

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> dist;
        dist.reserve(current.size());
        for (int v : current) dist.push_back(bfs_distances(g, v));
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                int d = dist[i][current[j]];
                for (int w = 0; w < n; ++w) {
                    if (!in_set[w] && dist[i][w] != kUnreachable && dist[j][w] != kUnreachable &&
                        dist[i][w] + dist[j][w] == d) {
                        in_set[w] = true;
                        changed = true;
                    }
                }
            }
        }
        if (changed) {
            current.clear();
            for (int v = 0; v < n; ++v)
                if (in_set[v]) current.push_back(v);
        }
    }
    return current;
}

std::vector<int> convex_hull(const Graph& g, const std::vector<int>& seed) {
    return convex_hull(g, std::span<const int>(seed));
}

bool is_convex(const Graph& g, std::span<const int> vertex_set) {
    std::vector<int> sorted(vertex_set.begin(), vertex_set.end());
    std::sort(sorted.begin(), sorted.end());
    return convex_hull(g, vertex_set) == sorted;
}

bool is_convex(const Graph& g, const std::vector<int>& vertex_set) {
    return is_convex(g, std::span<const int>(vertex_set));
}

namespace {

struct NeighborhoodRows {
    int words;
    std::vector<std::uint64_t> open;  // n rows of `words` words each

    explicit NeighborhoodRows(const Graph& g)
        : words((g.vertex_count() + 63) / 64), open(static_cast<std::size_t>(g.vertex_count()) * words, 0) {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w : g.neighbors(v)) open[static_cast<std::size_t>(v) * words + (w >> 6)] |= std::uint64_t{1} << (w & 63);
    }

    // Compares N(u) and N(v) (open) or N[u] and N[v] (closed) inside `alive`.
    bool twins(int u, int v, TwinKind kind, const std::vector<std::uint64_t>& alive) const {
        for (int k = 0; k < words; ++k) {
            std::uint64_t a = open[static_cast<std::size_t>(u) * words + k];
            std::uint64_t b = open[static_cast<std::size_t>(v) * words + k];
            if (kind == TwinKind::closed) {
                if ((u >> 6) == k) a |= std::uint64_t{1} << (u & 63);
                if ((v >> 6) == k) b |= std::uint64_t{1} << (v & 63);
            }
            if ((a & alive[k]) != (b & alive[k])) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<TwinPair> find_twins(const Graph& g) {
    int n = g.vertex_count();
    NeighborhoodRows rows(g);
    std::vector<std::uint64_t> alive(rows.words, ~std::uint64_t{0});
    std::vector<TwinPair> out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rows.twins(u, v, TwinKind::open, alive))
                out.push_back({u, v, TwinKind::open});
            else if (rows.twins(u, v, TwinKind::closed, alive))
                out.push_back({u, v, TwinKind::closed});
        }
    }
    return out;
}

TwinElimination twin_free_subgraph(const Graph& g) {
    int n = g.vertex_count();
    NeighborhoodRows rows(g);
    std::vector<std::uint64_t> alive(rows.words, 0);
    for (int v = 0; v < n; ++v) alive[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<bool> live(n, true);

    TwinElimination out;
    while (true) {
        bool found = false;
        for (int u = 0; u < n && !found; ++u) {
            if (!live[u]) continue;
            for (int v = u + 1; v < n && !found; ++v) {
                if (!live[v]) continue;
                std::optional<TwinKind> kind;
                if (rows.twins(u, v, TwinKind::open, alive))
                    kind = TwinKind::open;
                else if (rows.twins(u, v, TwinKind::closed, alive))
                    kind = TwinKind::closed;
                if (kind) {
                    out.removed.push_back(u);
                    out.survivor_of.push_back(v);
                    out.kinds.push_back(*kind);
                    live[u] = false;
                    alive[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
                    found = true;
                }
            }
        }
        if (!found) break;
    }
    for (int v = 0; v < n; ++v)
        if (live[v]) out.kept.push_back(v);
    out.graph = induced_subgraph(g, out.kept).graph;
    return out;
}

bool is_cograph(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("cograph test needs a nonempty graph");
    if (!is_connected(g)) throw std::invalid_argument("cograph test needs a connected graph");
    return twin_free_subgraph(g).kept.size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    int n = g.vertex_count();
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate vertex in induced subgraph selection");
    std::vector<int> to_new(n, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= n) throw std::invalid_argument(vertex_range_message(v, n));
        to_new[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int v : sorted)
        for (int w : g.neighbors(v))
            if (v < w && to_new[w] != -1) edges.emplace_back(to_new[v], to_new[w]);
    InducedSubgraph out;
    out.graph = Graph::from_edge_list(static_cast<int>(sorted.size()), edges);
    out.vertices = std::move(sorted);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    return induced_subgraph(g, std::span<const int>(vertices));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match vertex count");
    std::vector<bool> seen(n, false);
    for (int x : perm) {
        if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        int a = perm[u], b = perm[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph::from_edge_list(n, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    return relabel(g, std::span<const int>(perm));
}

}  // namespace mvis
