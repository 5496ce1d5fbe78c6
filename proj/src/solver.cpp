#include "mvis/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "mvis/visibility.hpp"

namespace mvis {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// A mutually visible set under construction. Every pair of members owns a
// stored shortest path whose interior avoids the whole set; push repairs or
// rejects, pop restores the previous state exactly.
class VisibilityState {
public:
    explicit VisibilityState(const Graph& g)
        : g_(g), points_(g.vertex_count()), dist_plain_(g.vertex_count()),
          dist_avoid_(g.vertex_count()), parent_(g.vertex_count()) {}

    int size() const { return points_.size(); }
    const std::vector<int>& members() const { return order_; }
    const PointSet& point_set() const { return points_; }

    bool push(int v) {
        plain_bfs(v);
        for (int u : order_)
            if (dist_plain_[u] == kUnreachable) return false;
        avoiding_bfs(v, -1);
        std::vector<std::pair<std::uint64_t, std::vector<int>>> fresh;
        fresh.reserve(order_.size());
        for (int u : order_) {
            if (dist_avoid_[u] != dist_plain_[u]) return false;
            fresh.emplace_back(pair_key(v, u), extract_path(v, u));
        }

        // Pairs whose stored path runs through v must find a detour.
        std::vector<std::pair<int, int>> hit;
        for (const auto& [key, path] : paths_)
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (path[i] == v) {
                    hit.emplace_back(path.front(), path.back());
                    break;
                }
        std::sort(hit.begin(), hit.end());
        std::vector<std::pair<std::uint64_t, std::vector<int>>> repaired;
        int bfs_source = -1;
        for (const auto& [a, b] : hit) {
            if (a != bfs_source) {
                avoiding_bfs(a, v);
                bfs_source = a;
            }
            const auto& old = paths_.at(pair_key(a, b));
            if (dist_avoid_[b] != static_cast<int>(old.size()) - 1) return false;
            repaired.emplace_back(pair_key(a, b), extract_path(a, b));
        }

        Undo undo;
        undo.vertex = v;
        for (auto& [key, path] : fresh) {
            undo.added.push_back(key);
            paths_[key] = std::move(path);
        }
        for (auto& [key, path] : repaired) {
            undo.replaced.emplace_back(key, std::move(paths_.at(key)));
            paths_[key] = std::move(path);
        }
        undo_.push_back(std::move(undo));
        points_.insert(v);
        order_.push_back(v);
        return true;
    }

    void pop() {
        Undo& undo = undo_.back();
        for (std::uint64_t key : undo.added) paths_.erase(key);
        for (auto& [key, path] : undo.replaced) paths_[key] = std::move(path);
        points_.erase(undo.vertex);
        order_.pop_back();
        undo_.pop_back();
    }

private:
    struct Undo {
        int vertex = -1;
        std::vector<std::uint64_t> added;
        std::vector<std::pair<std::uint64_t, std::vector<int>>> replaced;
    };

    const Graph& g_;
    PointSet points_;
    std::vector<int> order_;
    std::unordered_map<std::uint64_t, std::vector<int>> paths_;
    std::vector<Undo> undo_;
    std::vector<int> dist_plain_, dist_avoid_, parent_, queue_;

    void plain_bfs(int source) {
        std::fill(dist_plain_.begin(), dist_plain_.end(), kUnreachable);
        queue_.clear();
        queue_.push_back(source);
        dist_plain_[source] = 0;
        int want = points_.size();
        int found = points_.contains(source) ? 1 : 0;
        for (std::size_t head = 0; head < queue_.size() && found < want; ++head) {
            int u = queue_[head];
            for (int w : g_.neighbors(u)) {
                if (dist_plain_[w] != kUnreachable) continue;
                dist_plain_[w] = dist_plain_[u] + 1;
                if (points_.contains(w)) ++found;
                queue_.push_back(w);
            }
        }
    }

    // Members (plus `extra` if nonnegative) are reached but never expanded,
    // so recorded distances have point-free interiors.
    void avoiding_bfs(int source, int extra) {
        std::fill(dist_avoid_.begin(), dist_avoid_.end(), kUnreachable);
        queue_.clear();
        queue_.push_back(source);
        dist_avoid_[source] = 0;
        parent_[source] = -1;
        auto blocked = [&](int w) { return w == extra || points_.contains(w); };
        int want = points_.size() + (extra >= 0 && !points_.contains(extra) ? 1 : 0);
        int found = blocked(source) ? 1 : 0;
        for (std::size_t head = 0; head < queue_.size() && found < want; ++head) {
            int u = queue_[head];
            for (int w : g_.neighbors(u)) {
                if (dist_avoid_[w] != kUnreachable) continue;
                dist_avoid_[w] = dist_avoid_[u] + 1;
                parent_[w] = u;
                if (blocked(w))
                    ++found;
                else
                    queue_.push_back(w);
            }
        }
    }

    std::vector<int> extract_path(int source, int target) const {
        std::vector<int> path;
        for (int w = target; w != -1; w = w == source ? -1 : parent_[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
    }
};

int resolve_threads(const SolveOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("MV_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1 && parsed <= 256)
            return static_cast<int>(parsed);
    }
    return 1;
}

struct Shared {
    std::mutex mutex;
    int best = 0;
    PointSet witness;
    std::atomic<int> best_atomic{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> timed_out{false};
    Clock::time_point deadline{};
    bool has_deadline = false;
    int target = -1;  // decision threshold; -1 when optimizing

    int required() const {
        return target >= 0 ? target : best_atomic.load(std::memory_order_relaxed) + 1;
    }

    void offer(int size, PointSet candidate) {
        std::lock_guard<std::mutex> lock(mutex);
        if (size > best) {
            best = size;
            witness = std::move(candidate);
            best_atomic.store(size, std::memory_order_relaxed);
            if (target >= 0 && size >= target) stop.store(true, std::memory_order_relaxed);
        }
    }

    bool expired() {
        if (!has_deadline) return false;
        if (Clock::now() >= deadline) {
            timed_out.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
};

PointSet to_global_set(const std::vector<int>& local_members, const std::vector<int>& to_global,
                       int universe) {
    PointSet out(universe);
    for (int v : local_members) out.insert(to_global[v]);
    return out;
}

struct ComponentSearch {
    const Graph& graph;
    const std::vector<int>& to_global;
    int global_universe;
    std::vector<int> candidates;
    Shared& shared;

    void offer_state(const VisibilityState& state) {
        shared.offer(state.size(), to_global_set(state.members(), to_global, global_universe));
    }

    void dfs(VisibilityState& state, std::size_t idx) {
        std::uint64_t visited = shared.nodes.fetch_add(1, std::memory_order_relaxed);
        if ((visited & 0xff) == 0 && shared.expired()) return;
        if (shared.stop.load(std::memory_order_relaxed)) return;
        if (state.size() >= shared.required()) offer_state(state);
        if (idx == candidates.size()) return;
        if (state.size() + static_cast<int>(candidates.size() - idx) < shared.required()) return;
        if (state.push(candidates[idx])) {
            dfs(state, idx + 1);
            state.pop();
        }
        if (shared.stop.load(std::memory_order_relaxed)) return;
        if (state.size() + static_cast<int>(candidates.size() - idx - 1) < shared.required()) return;
        dfs(state, idx + 1);
    }

    void run(int threads) {
        if (candidates.empty()) return;
        if (threads <= 1) {
            VisibilityState state(graph);
            dfs(state, 0);
            return;
        }
        int depth = 0;
        while ((1 << depth) < 4 * threads && depth < static_cast<int>(candidates.size())) ++depth;
        int task_count = 1 << depth;
        std::atomic<int> next_task{0};
        auto worker = [&]() {
            while (true) {
                int task = next_task.fetch_add(1, std::memory_order_relaxed);
                if (task >= task_count || shared.stop.load(std::memory_order_relaxed)) return;
                VisibilityState state(graph);
                bool alive = true;
                for (int i = 0; i < depth && alive; ++i)
                    if (task & (1 << i)) alive = state.push(candidates[i]);
                if (!alive) continue;
                if (state.size() + static_cast<int>(candidates.size() - depth) < shared.required())
                    continue;
                dfs(state, depth);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
};

std::vector<int> ordered_candidates(const Graph& g) {
    PointSet cut = articulation_vertices(g);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cut.contains(v)) out.push_back(v);
    std::stable_sort(out.begin(), out.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return out;
}

void offer_incumbents(const Graph& comp, const std::vector<int>& to_global, int universe,
                      Shared& shared) {
    auto clique = greedy_clique(comp);
    if (!is_mv_set(comp, clique)) throw std::logic_error("greedy clique is not mutually visible");
    shared.offer(static_cast<int>(clique.size()), to_global_set(clique, to_global, universe));

    int hub = 0;
    for (int v = 1; v < comp.vertex_count(); ++v)
        if (comp.degree(v) > comp.degree(hub)) hub = v;
    std::vector<int> around(comp.neighbors(hub).begin(), comp.neighbors(hub).end());
    if (!around.empty()) {
        if (!is_mv_set(comp, around))
            throw std::logic_error("max degree neighborhood is not mutually visible");
        shared.offer(static_cast<int>(around.size()), to_global_set(around, to_global, universe));
    }
}

// Shared pipeline behind mu_exact and mu_decision. Runs the per-component
// branch and bound into `shared`.
void run_search(const Graph& g, Shared& shared, int threads) {
    auto comps = connected_components(g);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    // `stop` without `timed_out` means a decision target was answered.
    auto answered = [&shared] {
        return shared.stop.load(std::memory_order_relaxed) &&
               !shared.timed_out.load(std::memory_order_relaxed);
    };
    for (const auto& comp_vertices : comps) {
        if (answered()) return;
        if (static_cast<int>(comp_vertices.size()) < shared.required()) continue;
        auto sub = induced_subgraph(g, comp_vertices);
        // The greedy incumbents are near-free, so even a spent budget seeds
        // them; only the branch and bound itself honours the deadline.
        offer_incumbents(sub.graph, sub.vertices, g.vertex_count(), shared);
        if (answered()) return;
        if (shared.expired()) continue;
        if (shared.best_atomic.load(std::memory_order_relaxed) >= sub.graph.vertex_count())
            continue;
        ComponentSearch search{sub.graph, sub.vertices, g.vertex_count(),
                               ordered_candidates(sub.graph), shared};
        search.run(threads);
    }
}

// Lexicographically least maximum set: take each vertex in id order when the
// prefix still extends to a set of the known optimal size.
bool completable(VisibilityState& state, int from, int need, const Graph& g, Shared& shared) {
    if (need == 0) return true;
    std::uint64_t visited = shared.nodes.fetch_add(1, std::memory_order_relaxed);
    if ((visited & 0xff) == 0 && shared.expired()) return false;
    for (int v = from; v <= g.vertex_count() - need; ++v) {
        if (state.push(v)) {
            bool done = completable(state, v + 1, need - 1, g, shared);
            state.pop();
            if (done) return true;
        }
        if (shared.stop.load(std::memory_order_relaxed)) return false;
    }
    return false;
}

std::optional<PointSet> canonical_witness(const Graph& g, int mu, Shared& shared) {
    VisibilityState state(g);
    int taken = 0;
    for (int v = 0; v < g.vertex_count() && taken < mu; ++v) {
        if (!state.push(v)) continue;
        if (completable(state, v + 1, mu - taken - 1, g, shared))
            ++taken;
        else
            state.pop();
        if (shared.timed_out.load(std::memory_order_relaxed)) return std::nullopt;
    }
    if (taken != mu) throw std::logic_error("canonical witness construction fell short");
    return PointSet::from_members(g.vertex_count(), state.members());
}

void configure_deadline(Shared& shared, const SolveOptions& options) {
    if (options.budget_seconds > 0.0) {
        shared.has_deadline = true;
        shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(options.budget_seconds));
    }
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool subset_is_mv(const Graph& g, std::uint64_t mask) {
    PointSet points(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1u) points.insert(v);
    return is_mv_set(g, points);
}

std::uint64_t next_same_popcount(std::uint64_t mask) {
    std::uint64_t carry = mask & (~mask + 1);
    std::uint64_t up = mask + carry;
    return up | (((mask ^ up) / carry) >> 2);
}

// First subset of each size, largest first; returns (size, mask).
std::pair<int, std::uint64_t> first_hit(const Graph& g) {
    int n = g.vertex_count();
    for (int k = n; k >= 1; --k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            if (subset_is_mv(g, mask)) return {k, mask};
            mask = next_same_popcount(mask);
        }
    }
    return {0, 0};
}

}  // namespace

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> clique;
    std::vector<int> candidates(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) candidates[v] = v;
    while (!candidates.empty()) {
        int pick = candidates.front();
        for (int v : candidates)
            if (g.degree(v) > g.degree(pick)) pick = v;
        clique.push_back(pick);
        std::vector<int> narrowed;
        for (int v : candidates)
            if (g.adjacent(pick, v)) narrowed.push_back(v);
        candidates = std::move(narrowed);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

SolveResult mu_bruteforce(const Graph& g, int limit) {
    auto start = Clock::now();
    if (g.vertex_count() > limit)
        throw std::invalid_argument("graph with " + std::to_string(g.vertex_count()) +
                                    " vertices exceeds the brute force limit of " +
                                    std::to_string(limit) + "; use mu_exact instead");
    SolveResult out;
    out.method = SolveMethod::brute;
    auto [k, mask] = first_hit(g);
    out.mu = k;
    out.witness = PointSet(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1u) out.witness.insert(v);
    out.stats.seconds = seconds_since(start);
    return out;
}

SolveResult mu_exact(const Graph& g, const SolveOptions& options) {
    auto start = Clock::now();
    int threads = resolve_threads(options);
    Shared shared;
    shared.witness = PointSet(g.vertex_count());
    configure_deadline(shared, options);

    run_search(g, shared, threads);

    SolveResult out;
    out.method = SolveMethod::branch_bound;
    out.mu = shared.best;
    out.witness = shared.witness;
    out.optimal = !shared.timed_out.load();

    if (out.optimal && out.mu > 0 && options.canonical) {
        auto canon = canonical_witness(g, out.mu, shared);
        if (canon) out.witness = *canon;
        out.optimal = !shared.timed_out.load();
    } else if (out.optimal && out.mu > 0 && threads > 1) {
        // Parallel discovery order is racy; replay sequentially for a
        // reproducible witness.
        Shared replay;
        replay.witness = PointSet(g.vertex_count());
        replay.target = out.mu;
        configure_deadline(replay, options);
        run_search(g, replay, 1);
        if (replay.best >= out.mu) out.witness = replay.witness;
        shared.nodes += replay.nodes.load();
    }

    out.stats.nodes = shared.nodes.load();
    out.stats.seconds = seconds_since(start);
    return out;
}

DecisionResult mu_decision(const Graph& g, int k, const SolveOptions& options) {
    auto start = Clock::now();
    DecisionResult out;
    if (k <= 0) {
        out.verdict = Verdict::yes;
        out.witness = PointSet(g.vertex_count());
        out.stats.seconds = seconds_since(start);
        return out;
    }
    int threads = resolve_threads(options);
    Shared shared;
    shared.witness = PointSet(g.vertex_count());
    shared.target = k;
    configure_deadline(shared, options);
    run_search(g, shared, threads);

    if (shared.best >= k) {
        if (threads > 1) {
            Shared replay;
            replay.witness = PointSet(g.vertex_count());
            replay.target = k;
            configure_deadline(replay, options);
            run_search(g, replay, 1);
            if (replay.best >= k) shared.witness = replay.witness;
            shared.nodes += replay.nodes.load();
        }
        out.verdict = Verdict::yes;
        out.witness = shared.witness;
    } else if (shared.timed_out.load()) {
        out.verdict = Verdict::unknown;
    } else {
        out.verdict = Verdict::no;
    }
    out.stats.nodes = shared.nodes.load();
    out.stats.seconds = seconds_since(start);
    return out;
}

std::vector<PointSet> all_max_sets(const Graph& g, int limit) {
    if (g.vertex_count() > limit)
        throw std::invalid_argument("graph with " + std::to_string(g.vertex_count()) +
                                    " vertices exceeds the enumeration limit of " +
                                    std::to_string(limit));
    int n = g.vertex_count();
    auto [mu, first_mask] = first_hit(g);
    std::vector<PointSet> out;
    if (mu == 0) {
        out.emplace_back(n);
        return out;
    }
    std::uint64_t mask = (std::uint64_t{1} << mu) - 1;
    std::uint64_t limit_mask = std::uint64_t{1} << n;
    while (mask < limit_mask) {
        if (mask >= first_mask && subset_is_mv(g, mask)) {
            PointSet s(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u) s.insert(v);
            out.push_back(std::move(s));
        }
        mask = next_same_popcount(mask);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

int mu_upper_bound_partition(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<bool> covered(g.vertex_count(), false);
    for (const auto& part : parts)
        for (int v : part) {
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("part vertex out of range");
            covered[v] = true;
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) throw std::invalid_argument("parts do not cover vertex " + std::to_string(v));
    int sum = 0;
    for (const auto& part : parts) {
        auto hull = convex_hull(g, part);
        auto sub = induced_subgraph(g, hull);
        sum += mu_exact(sub.graph).mu;
    }
    return sum;
}

}  // namespace mvis
