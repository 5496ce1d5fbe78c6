#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

enum class SolveMethod { brute, branch_bound };

struct SolveStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct SolveResult {
    int mu = 0;
    PointSet witness;
    SolveMethod method = SolveMethod::brute;
    SolveStats stats;
    // False only when the search hit its time budget before finishing.
    bool optimal = true;
};

struct SolveOptions {
    // Lexicographically least maximum set instead of the first one found.
    bool canonical = false;
    // Wall clock budget in seconds; non-positive means unlimited.
    double budget_seconds = 0.0;
    // Worker threads for the root-level search split; 0 picks MV_THREADS or 1.
    int threads = 0;
};

enum class Verdict { yes, no, unknown };

struct DecisionResult {
    Verdict verdict = Verdict::unknown;
    std::optional<PointSet> witness;
    SolveStats stats;
};

// Exhaustive check over vertex subsets in decreasing size. Rejects graphs
// with more than `limit` vertices.
SolveResult mu_bruteforce(const Graph& g, int limit = 20);

// Branch and bound over articulation-free candidates, seeded with clique and
// degree lower bounds. Exact unless the budget runs out.
SolveResult mu_exact(const Graph& g, const SolveOptions& options = {});

// Is there a mutually visible set of size at least k?
DecisionResult mu_decision(const Graph& g, int k, const SolveOptions& options = {});

// Every maximum mutually visible set, sorted lexicographically. Rejects
// graphs with more than `limit` vertices.
std::vector<PointSet> all_max_sets(const Graph& g, int limit = 16);

// Sum of exact values over the convex hulls of the parts. The parts must
// cover every vertex.
int mu_upper_bound_partition(const Graph& g, const std::vector<std::vector<int>>& parts);

// Largest clique found by the max-degree greedy heuristic.
std::vector<int> greedy_clique(const Graph& g);

}  // namespace mvis
