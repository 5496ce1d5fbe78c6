#include "mvis/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mvis/solver.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

void validate(const CnfFormula& f) {
    if (f.variable_count < 0) throw std::invalid_argument("negative variable count");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Clause& clause = f.clauses[j];
        for (int lit : clause) {
            if (lit == 0) throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                                      " contains a zero literal");
            if (std::abs(lit) > f.variable_count)
                throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                            " references variable " + std::to_string(std::abs(lit)) +
                                            " beyond the declared count");
        }
        Clause sorted = clause;
        std::sort(sorted.begin(), sorted.end());
        if (sorted[0] == sorted[1] || sorted[1] == sorted[2])
            throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                        " repeats a literal");
    }
}

bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment) {
    for (int lit : clause) {
        bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
        if (lit > 0 ? value : !value) return true;
    }
    return false;
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.variable_count)
        throw std::invalid_argument("assignment size does not match the variable count");
    return std::all_of(f.clauses.begin(), f.clauses.end(),
                       [&](const Clause& c) { return clause_satisfied(c, assignment); });
}

std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& f,
                                                            int max_variables) {
    validate(f);
    if (f.variable_count > max_variables)
        throw std::invalid_argument("formula with " + std::to_string(f.variable_count) +
                                    " variables exceeds the exhaustive search limit of " +
                                    std::to_string(max_variables));
    std::vector<bool> assignment(f.variable_count, false);
    std::uint64_t total = std::uint64_t{1} << f.variable_count;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < f.variable_count; ++i) assignment[i] = (mask >> i) & 1u;
        if (satisfies(f, assignment)) return assignment;
    }
    return std::nullopt;
}

namespace {

bool literal_disjoint(const Clause& a, const Clause& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return false;
    return true;
}

}  // namespace

std::optional<std::array<int, 3>> disjoint_clause_triple(const CnfFormula& f) {
    int q = static_cast<int>(f.clauses.size());
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            if (!literal_disjoint(f.clauses[a], f.clauses[b])) continue;
            for (int c = b + 1; c < q; ++c)
                if (literal_disjoint(f.clauses[a], f.clauses[c]) &&
                    literal_disjoint(f.clauses[b], f.clauses[c]))
                    return std::array<int, 3>{a, b, c};
        }
    return std::nullopt;
}

CnfFormula ensure_disjoint_clauses(const CnfFormula& f) {
    validate(f);
    if (disjoint_clause_triple(f)) return f;
    CnfFormula out = f;
    int a = f.variable_count + 1, b = a + 1, c = b + 1, d = c + 1, e = d + 1;
    out.variable_count += 5;
    // Always-satisfied clauses over fresh variables, pairwise disjoint as
    // literal sets, so satisfiability is unchanged.
    out.clauses.push_back({a, -a, b});
    out.clauses.push_back({-b, c, -c});
    out.clauses.push_back({d, -d, e});
    return out;
}

namespace {

struct Layout {
    int p = 0;
    int q = 0;
    int u(int i) const { return 4 * (i - 1); }
    int ubar(int i) const { return 4 * (i - 1) + 1; }
    int s(int i) const { return 4 * (i - 1) + 2; }
    int t(int i) const { return 4 * (i - 1) + 3; }
    int clause(int j) const { return 4 * p + (j - 1); }
    int w() const { return 4 * p + q; }
    int y() const { return 4 * p + q + 1; }
    int y_prime() const { return 4 * p + q + 2; }
    int z() const { return 4 * p + q + 3; }
    int z_prime() const { return 4 * p + q + 4; }
    int total() const { return 4 * p + q + 5; }
    int literal_vertex(int lit) const { return lit > 0 ? u(lit) : ubar(-lit); }
};

Layout layout_of(const MVInstance& instance) {
    return Layout{instance.variable_count, instance.clause_count};
}

MVInstance build_instance(const CnfFormula& f) {
    Layout lay{f.variable_count, static_cast<int>(f.clauses.size())};
    std::vector<Edge> edges;
    for (int i = 1; i <= lay.p; ++i) {
        edges.emplace_back(lay.u(i), lay.ubar(i));
        edges.emplace_back(lay.ubar(i), lay.s(i));
        edges.emplace_back(lay.ubar(i), lay.t(i));
        edges.emplace_back(lay.s(i), lay.t(i));
        edges.emplace_back(lay.u(i), lay.y());
        edges.emplace_back(lay.ubar(i), lay.y());
        edges.emplace_back(lay.s(i), lay.z());
        edges.emplace_back(lay.t(i), lay.z());
        edges.emplace_back(lay.s(i), lay.w());
        edges.emplace_back(lay.t(i), lay.w());
    }
    for (int j = 1; j <= lay.q; ++j) {
        for (int lit : f.clauses[j - 1]) edges.emplace_back(lay.literal_vertex(lit), lay.clause(j));
        edges.emplace_back(lay.clause(j), lay.w());
    }
    edges.emplace_back(lay.y(), lay.z());
    edges.emplace_back(lay.y(), lay.y_prime());
    edges.emplace_back(lay.z(), lay.z_prime());
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);

    MVInstance out;
    out.graph = Graph::from_edge_list(lay.total(), edges);
    out.k = 3 * lay.p + lay.q + 2;
    out.variable_count = lay.p;
    out.clause_count = lay.q;
    out.roles.resize(lay.total());
    for (int i = 1; i <= lay.p; ++i) {
        out.roles[lay.u(i)] = {RoleKind::u, i};
        out.roles[lay.ubar(i)] = {RoleKind::ubar, i};
        out.roles[lay.s(i)] = {RoleKind::s, i};
        out.roles[lay.t(i)] = {RoleKind::t, i};
    }
    for (int j = 1; j <= lay.q; ++j) out.roles[lay.clause(j)] = {RoleKind::clause, j};
    out.roles[lay.w()] = {RoleKind::w, 0};
    out.roles[lay.y()] = {RoleKind::y, 0};
    out.roles[lay.y_prime()] = {RoleKind::y_prime, 0};
    out.roles[lay.z()] = {RoleKind::z, 0};
    out.roles[lay.z_prime()] = {RoleKind::z_prime, 0};

    // Each variable gadget must have exactly two maximum sets of size three,
    // one per truth value.
    for (int i = 1; i <= lay.p; ++i) {
        auto sub = induced_subgraph(out.graph,
                                    std::vector<int>{lay.u(i), lay.ubar(i), lay.s(i), lay.t(i)});
        auto sets = all_max_sets(sub.graph);
        if (sets.size() != 2 || sets[0].size() != 3 ||
            sets[0].contains(0) == sets[0].contains(1) ||
            sets[1].contains(0) == sets[1].contains(1) ||
            sets[0].contains(0) == sets[1].contains(0))
            throw std::logic_error("variable gadget failed its maximum set check");
    }
    return out;
}

}  // namespace

MVInstance sat_to_mv(const CnfFormula& f) {
    validate(f);
    if (!disjoint_clause_triple(f))
        throw std::invalid_argument(
            "construction needs three clauses with pairwise disjoint literal sets; "
            "apply ensure_disjoint_clauses first");
    return build_instance(f);
}

MVInstance sat_to_mv_relaxed(const CnfFormula& f) {
    validate(f);
    return build_instance(f);
}

PointSet assignment_to_points(const MVInstance& instance, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != instance.variable_count)
        throw std::invalid_argument("assignment size does not match the variable count");
    Layout lay = layout_of(instance);
    PointSet points(instance.graph.vertex_count());
    for (int i = 1; i <= lay.p; ++i) {
        points.insert(assignment[i - 1] ? lay.ubar(i) : lay.u(i));
        points.insert(lay.s(i));
        points.insert(lay.t(i));
    }
    for (int j = 1; j <= lay.q; ++j) points.insert(lay.clause(j));
    points.insert(lay.y_prime());
    points.insert(lay.z_prime());
    return points;
}

std::vector<bool> points_to_assignment(const MVInstance& instance, const PointSet& points) {
    if (points.universe() != instance.graph.vertex_count())
        throw std::invalid_argument("point set universe does not match the instance");
    Layout lay = layout_of(instance);
    std::vector<bool> assignment(lay.p, false);
    for (int i = 1; i <= lay.p; ++i) {
        bool has_u = points.contains(lay.u(i));
        bool has_ubar = points.contains(lay.ubar(i));
        if (has_u == has_ubar)
            throw std::invalid_argument("points must contain exactly one of the two literal "
                                        "vertices of variable " + std::to_string(i));
        assignment[i - 1] = has_ubar;
    }
    return assignment;
}

int certify_upper_bound(const MVInstance& instance) {
    Layout lay = layout_of(instance);
    const Graph& g = instance.graph;
    if (g.vertex_count() != lay.total())
        throw std::invalid_argument("instance graph size does not match its parameters");

    // Recover each clause's literal set from the graph.
    CnfFormula recovered;
    recovered.variable_count = lay.p;
    for (int j = 1; j <= lay.q; ++j) {
        Clause clause{};
        int at = 0;
        for (int nb : g.neighbors(lay.clause(j))) {
            if (nb == lay.w()) continue;
            if (at == 3 || nb >= 4 * lay.p || nb % 4 >= 2)
                throw std::runtime_error("clause vertex has unexpected neighbours");
            int variable = nb / 4 + 1;
            clause[at++] = nb % 4 == 0 ? variable : -variable;
        }
        if (at != 3) throw std::runtime_error("clause vertex has unexpected neighbours");
        recovered.clauses.push_back(clause);
    }

    auto triple = disjoint_clause_triple(recovered);
    if (!triple)
        throw std::runtime_error(
            "certificate unavailable: no three clauses with pairwise disjoint literal sets");

    std::vector<std::vector<int>> parts;
    parts.push_back({lay.clause((*triple)[0] + 1), lay.clause((*triple)[1] + 1),
                     lay.clause((*triple)[2] + 1), lay.w()});
    parts.push_back({lay.y_prime(), lay.y(), lay.z(), lay.z_prime()});
    for (int i = 1; i <= lay.p; ++i)
        parts.push_back({lay.u(i), lay.ubar(i), lay.s(i), lay.t(i)});
    for (int j = 1; j <= lay.q; ++j) {
        if (j - 1 == (*triple)[0] || j - 1 == (*triple)[1] || j - 1 == (*triple)[2]) continue;
        parts.push_back({lay.clause(j)});
    }

    std::vector<bool> covered(g.vertex_count(), false);
    int total = 0;
    for (const auto& part : parts) {
        if (!is_convex(g, part)) throw std::runtime_error("certificate part is not convex");
        for (int v : part) {
            if (covered[v]) throw std::runtime_error("certificate parts overlap");
            covered[v] = true;
        }
        total += static_cast<int>(part.size());
    }
    if (total != g.vertex_count()) throw std::runtime_error("certificate parts do not cover V");

    int bound = 0;
    for (const auto& part : parts) bound += mu_bruteforce(induced_subgraph(g, part).graph).mu;
    if (bound != instance.k)
        throw std::runtime_error("certificate sum " + std::to_string(bound) +
                                 " does not equal the target " + std::to_string(instance.k));
    return bound;
}

}  // namespace mvis
