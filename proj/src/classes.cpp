#include "mvis/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvis/generators.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

PointSet checked_witness(const Graph& g, std::vector<int> members) {
    auto set = PointSet::from_members(g.vertex_count(), members);
    if (!is_mv_set(g, set)) throw std::logic_error("closed form produced an invalid witness");
    return set;
}

bool is_complete(const Graph& g) {
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_path_shaped(const Graph& g, const std::vector<int>& component) {
    // A connected component is a path when it is a tree of max degree two.
    int edges = 0;
    for (int v : component) {
        if (g.degree(v) > 2) return false;
        edges += g.degree(v);
    }
    return edges / 2 == static_cast<int>(component.size()) - 1;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
    return out;
}

std::vector<int> all_vertices_except(const Graph& g, std::vector<int> dropped) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::find(dropped.begin(), dropped.end(), v) == dropped.end()) out.push_back(v);
    return out;
}

}  // namespace

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::edgeless: return "edgeless";
        case GraphClass::complete: return "complete";
        case GraphClass::path: return "path";
        case GraphClass::path_union: return "path-union";
        case GraphClass::cycle: return "cycle";
        case GraphClass::tree: return "tree";
        case GraphClass::block_graph: return "block-graph";
        case GraphClass::grid: return "grid";
        case GraphClass::complete_bipartite: return "complete-bipartite";
        case GraphClass::join: return "join";
        case GraphClass::cograph: return "cograph";
        case GraphClass::all_but_one: return "all-but-one";
    }
    return "unknown";
}

CharReport classify(const Graph& g) {
    CharReport out;
    int n = g.vertex_count();
    if (n == 0) return out;
    out.mu_is_one = g.edge_count() == 0;
    auto comps = connected_components(g);
    out.mu_is_two = g.edge_count() >= 1 &&
                    std::all_of(comps.begin(), comps.end(),
                                [&](const auto& c) { return is_path_shaped(g, c); });
    out.mu_is_vertex_count = is_complete(g);
    if (comps.size() == 1 && n > 2) {
        bool triangle = n == 3 && g.edge_count() == 3;
        bool star = g.edge_count() == n - 1 && g.max_degree() == n - 1;
        out.mu_is_edge_count = triangle || star;
    }
    return out;
}

ClassResult mu_path(int n) {
    require(n >= 2, "path closed form needs at least two vertices");
    return {2, checked_witness(path_graph(n), {0, 1}), GraphClass::path};
}

ClassResult mu_cycle(int n) {
    require(n >= 3, "cycle closed form needs at least three vertices");
    int half = (n + 1) / 2;
    return {3, checked_witness(cycle_graph(n), {0, half - 1, half}), GraphClass::cycle};
}

ClassResult mu_tree(const Graph& g) {
    require(g.vertex_count() >= 1, "tree closed form needs a nonempty graph");
    require(is_connected(g) && g.edge_count() == g.vertex_count() - 1, "graph is not a tree");
    if (g.vertex_count() == 1) return {1, checked_witness(g, {0}), GraphClass::tree};
    std::vector<int> leaves;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    return {static_cast<int>(leaves.size()), checked_witness(g, leaves), GraphClass::tree};
}

ClassResult mu_block_graph(const Graph& g) {
    require(g.vertex_count() >= 1, "block graph closed form needs a nonempty graph");
    require(is_connected(g), "block graph closed form needs a connected graph");
    require(is_block_graph(g), "graph has a biconnected component that is not a clique");
    auto cut = articulation_vertices(g);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cut.contains(v)) keep.push_back(v);
    return {static_cast<int>(keep.size()), checked_witness(g, keep), GraphClass::block_graph};
}

namespace {

// Corner pattern of size 2k for the k by k grid, k >= 4.
std::vector<std::pair<int, int>> grid_corner_pattern(int k) {
    std::vector<std::pair<int, int>> coords{{1, 0}, {2, 0}, {0, 1}, {3, 1}};
    for (int j = 2; j <= k - 3; ++j) {
        coords.emplace_back(j - 2, j);
        coords.emplace_back(j + 2, j);
    }
    coords.emplace_back(k - 4, k - 2);
    coords.emplace_back(k - 1, k - 2);
    coords.emplace_back(k - 3, k - 1);
    coords.emplace_back(k - 2, k - 1);
    return coords;
}

}  // namespace

ClassResult mu_grid(int m, int n) {
    require(m >= 1 && n >= 1, "grid closed form needs positive dimensions");
    int a = std::min(m, n);
    int b = std::max(m, n);
    std::vector<std::pair<int, int>> coords;
    int mu = 0;
    if (a == 1) {
        mu = b == 1 ? 1 : 2;
        coords = b == 1 ? std::vector<std::pair<int, int>>{{0, 0}}
                        : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}};
    } else if (a == 2) {
        mu = b == 2 ? 3 : 4;
        coords = b == 2 ? std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}}
                        : std::vector<std::pair<int, int>>{{0, 0}, {0, b - 1}, {1, 0}, {1, b - 1}};
    } else if (a == 3) {
        if (b == 3) {
            mu = 5;
            coords = {{0, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 1}};
        } else if (b == 4) {
            mu = 6;
            coords = {{0, 0}, {0, 2}, {1, 0}, {1, 3}, {2, 1}, {2, 2}};
        } else {
            mu = 6;
            coords = {{0, 0}, {0, b - 1}, {1, 1}, {1, b - 2}, {2, 0}, {2, b - 1}};
        }
    } else {
        mu = 2 * a;
        coords = grid_corner_pattern(a);
    }
    std::vector<int> members;
    for (auto [r, c] : coords) {
        if (m > n) std::swap(r, c);  // patterns assume rows <= columns
        members.push_back(r * n + c);
    }
    std::sort(members.begin(), members.end());
    return {mu, checked_witness(grid_graph(m, n), members), GraphClass::grid};
}

ClassResult mu_complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "both parts need at least one vertex");
    Graph g = complete_bipartite_graph(m, n);
    int a = std::min(m, n);
    std::vector<int> members;
    int mu = 0;
    if (a == 1) {
        if (m == 1 && n == 1) {
            mu = 2;
            members = {0, 1};
        } else if (m == 1) {
            mu = n;
            for (int v = 1; v <= n; ++v) members.push_back(v);
        } else {
            mu = m;
            for (int v = 0; v < m; ++v) members.push_back(v);
        }
    } else if (a == 2) {
        // Everything except the second vertex of the two-vertex part.
        mu = std::max(m, n) + 1;
        members = all_vertices_except(g, {m == 2 ? 1 : m + 1});
    } else {
        mu = m + n - 2;
        members = all_vertices_except(g, {0, m});
    }
    return {mu, checked_witness(g, members), GraphClass::complete_bipartite};
}

std::optional<int> all_but_one_vertex(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (u == v) continue;
            int rest_degree = g.degree(u) - (g.adjacent(u, v) ? 1 : 0);
            if (rest_degree < n - 2 && !g.adjacent(u, v)) ok = false;
        }
        if (ok) return v;
    }
    return std::nullopt;
}

namespace {

ClassResult join_case_result(const Graph& joined, const Graph& a, const Graph& b, int offset,
                             GraphClass tag) {
    int total = joined.vertex_count();
    if (is_complete(a) && is_complete(b))
        return {total, PointSet::from_members(total, all_vertices(joined)), tag};
    if (auto v = all_but_one_vertex(a))
        return {total - 1, PointSet::from_members(total, all_vertices_except(joined, {*v})), tag};
    if (auto v = all_but_one_vertex(b))
        return {total - 1,
                PointSet::from_members(total, all_vertices_except(joined, {offset + *v})), tag};
    return {total - 2, PointSet::from_members(total, all_vertices_except(joined, {0, offset})),
            tag};
}

}  // namespace

ClassResult mu_join(const Graph& a, const Graph& b) {
    require(a.vertex_count() >= 1 && b.vertex_count() >= 1, "join needs two nonempty graphs");
    Graph joined = join_graphs(a, b);
    ClassResult out = join_case_result(joined, a, b, a.vertex_count(), GraphClass::join);
    if (!is_mv_set(joined, out.witness))
        throw std::logic_error("join closed form produced an invalid witness");
    return out;
}

ClassResult mu_cograph(const Graph& g) {
    require(is_cograph(g), "graph is not a connected cograph");
    int n = g.vertex_count();
    if (n == 1) return {1, checked_witness(g, {0}), GraphClass::cograph};

    // Replay twin elimination backwards: the final two vertices seed the two
    // join sides and every removed twin lands beside its survivor.
    auto tw = twin_free_subgraph(g);
    std::vector<int> side(n, -1);
    side[tw.kept.front()] = 0;
    side[tw.removed.back()] = 1;
    for (int i = static_cast<int>(tw.removed.size()) - 2; i >= 0; --i)
        side[tw.removed[i]] = side[tw.survivor_of[i]];

    std::vector<int> left, right;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? left : right).push_back(v);
    for (int u : left)
        for (int w : right)
            if (!g.adjacent(u, w))
                throw std::logic_error("twin replay did not produce a join partition");

    auto left_sub = induced_subgraph(g, left);
    auto right_sub = induced_subgraph(g, right);
    ClassResult out;
    out.class_tag = GraphClass::cograph;
    if (is_complete(left_sub.graph) && is_complete(right_sub.graph)) {
        out.mu = n;
        out.witness = PointSet::from_members(n, all_vertices(g));
    } else if (auto v = all_but_one_vertex(left_sub.graph)) {
        out.mu = n - 1;
        out.witness = PointSet::from_members(n, all_vertices_except(g, {left_sub.vertices[*v]}));
    } else if (auto v = all_but_one_vertex(right_sub.graph)) {
        out.mu = n - 1;
        out.witness = PointSet::from_members(n, all_vertices_except(g, {right_sub.vertices[*v]}));
    } else {
        out.mu = n - 2;
        out.witness = PointSet::from_members(
            n, all_vertices_except(g, {left_sub.vertices.front(), right_sub.vertices.front()}));
    }
    if (!is_mv_set(g, out.witness))
        throw std::logic_error("cograph closed form produced an invalid witness");
    return out;
}

TorusFact mu_torus_bound(int m, int n) {
    require(m >= 3 && n >= 3, "torus needs both dimensions at least three");
    TorusFact out;
    out.m = m;
    out.n = n;
    out.bound = 3 * std::min(m, n);
    if (m == n && m <= 11)
        out.attained = TorusFact::Attained::no;
    else if (m == n && (m == 12 || m == 15))
        out.attained = TorusFact::Attained::yes;
    else
        out.attained = TorusFact::Attained::unknown;
    return out;
}

std::optional<ClassResult> mu_formula(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    auto report = classify(g);
    if (report.mu_is_one) return ClassResult{1, checked_witness(g, {0}), GraphClass::edgeless};
    if (report.mu_is_vertex_count)
        return ClassResult{n, checked_witness(g, all_vertices(g)), GraphClass::complete};
    auto comps = connected_components(g);
    if (report.mu_is_two) {
        int u = 0;
        while (g.degree(u) == 0) ++u;
        return ClassResult{2, checked_witness(g, {u, g.neighbors(u)[0]}),
                           comps.size() == 1 ? GraphClass::path : GraphClass::path_union};
    }
    if (comps.size() != 1) return std::nullopt;
    if (n >= 3 && g.max_degree() == 2 && g.edge_count() == n) {
        // Walk the cycle to place the witness at opposite arcs.
        std::vector<int> order{0, g.neighbors(0)[0]};
        while (static_cast<int>(order.size()) < n) {
            int prev = order[order.size() - 2];
            int cur = order.back();
            auto nb = g.neighbors(cur);
            order.push_back(nb[0] == prev ? nb[1] : nb[0]);
        }
        int half = (n + 1) / 2;
        return ClassResult{3, checked_witness(g, {order[0], order[half - 1], order[half]}),
                           GraphClass::cycle};
    }
    if (g.edge_count() == n - 1) return mu_tree(g);
    if (is_block_graph(g)) return mu_block_graph(g);

    // Complete bipartite: two colour classes with every cross edge present.
    {
        auto dist = bfs_distances(g, 0);
        std::vector<int> even, odd;
        for (int v = 0; v < n; ++v) (dist[v] % 2 == 0 ? even : odd).push_back(v);
        long long cross = static_cast<long long>(even.size()) * static_cast<long long>(odd.size());
        if (!even.empty() && !odd.empty() && g.edge_count() == cross) {
            bool bipartite_complete = true;
            for (int u : even)
                for (int w : odd)
                    if (!g.adjacent(u, w)) {
                        bipartite_complete = false;
                        break;
                    }
            if (bipartite_complete) {
                int a = static_cast<int>(even.size());
                int b = static_cast<int>(odd.size());
                ClassResult shape = mu_complete_bipartite(a, b);
                // Map the canonical witness through the colour classes.
                std::vector<int> order(even);
                order.insert(order.end(), odd.begin(), odd.end());
                std::vector<int> members;
                for (int v : shape.witness.members()) members.push_back(order[v]);
                std::sort(members.begin(), members.end());
                return ClassResult{shape.mu, checked_witness(g, members),
                                   GraphClass::complete_bipartite};
            }
        }
    }

    if (twin_free_subgraph(g).kept.size() == 1) return mu_cograph(g);
    if (auto v = all_but_one_vertex(g)) {
        // Not complete, so dropping this vertex is optimal.
        return ClassResult{n - 1, checked_witness(g, all_vertices_except(g, {*v})),
                           GraphClass::all_but_one};
    }
    return std::nullopt;
}

}  // namespace mvis
