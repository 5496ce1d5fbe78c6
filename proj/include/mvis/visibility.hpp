#pragma once

#include <optional>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

struct PointDistance {
    int point = 0;
    int distance = kUnreachable;
    bool operator==(const PointDistance&) const = default;
};

// Distances from one source to every member of a point set, sorted by point.
using PointDistanceMap = std::vector<PointDistance>;

// Breadth first search from `source` that reports the distance to every
// member of `points`. With through_points the search runs on all of g, so the
// reported values are plain distances. Without it, points are assigned a
// distance when first reached but never expanded, so the value for u is the
// distance in the graph with points other than source and u removed, or
// kUnreachable when every route is blocked.
PointDistanceMap bfs_mv(const Graph& g, const PointSet& points, int source, bool through_points);

// True when every pair of points has a shortest path whose interior avoids
// the whole set. Sets of size at most one qualify.
bool is_mv_set(const Graph& g, const PointSet& points);
bool is_mv_set(const Graph& g, const std::vector<int>& points);

// Pairwise test for two members of `points`.
bool visible(const Graph& g, const PointSet& points, int u, int v);

// A shortest u-v path with point-free interior, endpoints included,
// or nullopt when none exists.
std::optional<std::vector<int>> witness_path(const Graph& g, const PointSet& points, int u, int v);

}  // namespace mvis
