#include "oracle.hpp"

#include <algorithm>
#include <deque>

namespace mvtest {

namespace {

std::vector<std::vector<bool>> adjacency_matrix(const mvis::Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    return adj;
}

// Distance from u to v walking only through allowed interior vertices.
int restricted_distance(const std::vector<std::vector<bool>>& adj,
                        const std::vector<bool>& blocked, int u, int v) {
    int n = static_cast<int>(adj.size());
    std::vector<int> dist(n, -1);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        if (at == v) return dist[at];
        for (int next = 0; next < n; ++next) {
            if (!adj[at][next] || dist[next] >= 0) continue;
            if (blocked[next] && next != v) continue;
            dist[next] = dist[at] + 1;
            queue.push_back(next);
        }
    }
    return -1;
}

}  // namespace

std::vector<std::vector<int>> all_pairs_distances(const mvis::Graph& g) {
    int n = g.vertex_count();
    const int infinity = 1 << 28;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, infinity));
    for (int v = 0; v < n; ++v) dist[v][v] = 0;
    for (auto [u, v] : g.edges()) dist[u][v] = dist[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dist[i][j] >= infinity) dist[i][j] = -1;
    return dist;
}

bool oracle_is_mv_set(const mvis::Graph& g, const std::vector<int>& points) {
    auto adj = adjacency_matrix(g);
    auto dist = all_pairs_distances(g);
    std::vector<bool> in_set(g.vertex_count(), false);
    for (int p : points) in_set[p] = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            int u = points[i];
            int v = points[j];
            if (dist[u][v] < 0) return false;
            if (restricted_distance(adj, in_set, u, v) != dist[u][v]) return false;
        }
    }
    return true;
}

int oracle_mu(const mvis::Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) points.push_back(v);
        if (oracle_is_mv_set(g, points)) best = size;
    }
    return best;
}

std::vector<std::vector<int>> oracle_max_sets(const mvis::Graph& g) {
    int n = g.vertex_count();
    int mu = oracle_mu(g);
    std::vector<std::vector<int>> sets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != mu) continue;
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) points.push_back(v);
        if (oracle_is_mv_set(g, points)) sets.push_back(points);
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

std::vector<int> oracle_interval(const mvis::Graph& g, int u, int v) {
    auto dist = all_pairs_distances(g);
    std::vector<int> interval;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (dist[u][w] >= 0 && dist[w][v] >= 0 && dist[u][w] + dist[w][v] == dist[u][v])
            interval.push_back(w);
    return interval;
}

std::vector<int> oracle_hull(const mvis::Graph& g, const std::vector<int>& seed) {
    std::vector<bool> in_hull(g.vertex_count(), false);
    for (int v : seed) in_hull[v] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> current;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (in_hull[v]) current.push_back(v);
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                for (int w : oracle_interval(g, current[i], current[j]))
                    if (!in_hull[w]) {
                        in_hull[w] = true;
                        grew = true;
                    }
    }
    std::vector<int> hull;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_hull[v]) hull.push_back(v);
    return hull;
}

bool oracle_satisfiable(const mvis::CnfFormula& f) {
    for (std::uint32_t mask = 0; mask < (1u << f.variable_count); ++mask) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool clause_true = false;
            for (int literal : clause) {
                int variable = std::abs(literal) - 1;
                bool value = (mask >> variable) & 1u;
                if ((literal > 0) == value) clause_true = true;
            }
            if (!clause_true) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

}  // namespace mvtest
