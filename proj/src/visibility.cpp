#include "mvis/visibility.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mvis {

namespace {

void check_universe(const Graph& g, const PointSet& points) {
    if (points.universe() != g.vertex_count())
        throw std::invalid_argument("point set universe does not match the graph");
}

// Shared BFS core. Blocked vertices other than the source receive a distance
// when first reached but are never expanded. Stops once `targets_needed`
// blocked-or-source targets have been assigned a distance.
struct MvSearch {
    std::vector<int> dist;
    std::vector<int> parent;

    MvSearch(const Graph& g, const PointSet& blocked, int source, bool expand_blocked,
             int targets_needed) {
        dist.assign(g.vertex_count(), kUnreachable);
        parent.assign(g.vertex_count(), -1);
        dist[source] = 0;
        int found = blocked.contains(source) ? 1 : 0;
        std::deque<int> queue{source};
        while (!queue.empty() && found < targets_needed) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (dist[w] != kUnreachable) continue;
                dist[w] = dist[u] + 1;
                parent[w] = u;
                if (blocked.contains(w)) {
                    ++found;
                    if (expand_blocked) queue.push_back(w);
                } else {
                    queue.push_back(w);
                }
            }
        }
    }
};

}  // namespace

PointDistanceMap bfs_mv(const Graph& g, const PointSet& points, int source, bool through_points) {
    check_universe(g, points);
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("bfs_mv source out of range");
    MvSearch search(g, points, source, through_points, points.size());
    PointDistanceMap out;
    out.reserve(points.size());
    for (int p : points.members()) out.push_back({p, search.dist[p]});
    return out;
}

bool is_mv_set(const Graph& g, const PointSet& points) {
    check_universe(g, points);
    if (points.size() <= 1) return true;
    auto members = points.members();
    auto reach = bfs_distances(g, members.front());
    for (int p : members)
        if (reach[p] == kUnreachable) return false;
    for (int p : members) {
        MvSearch plain(g, points, p, true, points.size());
        MvSearch avoiding(g, points, p, false, points.size());
        for (int q : members)
            if (plain.dist[q] != avoiding.dist[q]) return false;
    }
    return true;
}

bool is_mv_set(const Graph& g, const std::vector<int>& points) {
    return is_mv_set(g, PointSet::from_members(g.vertex_count(), points));
}

bool visible(const Graph& g, const PointSet& points, int u, int v) {
    check_universe(g, points);
    if (!points.contains(u) || !points.contains(v))
        throw std::invalid_argument("visibility query endpoints must be points");
    if (u == v) return true;
    auto plain = bfs_distances(g, u);
    if (plain[v] == kUnreachable) return false;
    MvSearch avoiding(g, points, u, false, points.size());
    return avoiding.dist[v] == plain[v];
}

std::optional<std::vector<int>> witness_path(const Graph& g, const PointSet& points, int u, int v) {
    check_universe(g, points);
    if (!points.contains(u) || !points.contains(v))
        throw std::invalid_argument("witness path endpoints must be points");
    if (u == v) return std::vector<int>{u};
    auto plain = bfs_distances(g, u);
    if (plain[v] == kUnreachable) return std::nullopt;
    MvSearch avoiding(g, points, u, false, points.size());
    if (avoiding.dist[v] != plain[v]) return std::nullopt;
    std::vector<int> path;
    for (int w = v; w != -1; w = avoiding.parent[w]) path.push_back(w);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace mvis
