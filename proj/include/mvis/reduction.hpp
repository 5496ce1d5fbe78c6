#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

// Clause literals are nonzero integers, negative for negations, as in DIMACS.
using Clause = std::array<int, 3>;

struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;
};

// Rejects literals out of range, zero literals and repeated literals.
void validate(const CnfFormula& f);

bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment);
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

// Exhaustive search over assignments; rejects formulas with more than
// `max_variables` variables.
std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& f,
                                                            int max_variables = 24);

// First triple of clause indices whose literal sets are pairwise disjoint.
std::optional<std::array<int, 3>> disjoint_clause_triple(const CnfFormula& f);

// Appends five fresh variables and three always-satisfied pairwise disjoint
// clauses when the formula has no such triple; otherwise returns it unchanged.
CnfFormula ensure_disjoint_clauses(const CnfFormula& f);

enum class RoleKind { u, ubar, s, t, clause, w, y, y_prime, z, z_prime };

struct VertexRole {
    RoleKind kind = RoleKind::w;
    // 1-based variable or clause number; 0 for the frame vertices.
    int index = 0;
    bool operator==(const VertexRole&) const = default;
};

struct MVInstance {
    Graph graph;
    int k = 0;
    std::vector<VertexRole> roles;
    int variable_count = 0;
    int clause_count = 0;
};

// Decision instance with target k = 3p + q + 2: the graph has a mutually
// visible set of that size exactly when the formula is satisfiable. Needs a
// pairwise disjoint clause triple; run ensure_disjoint_clauses first.
MVInstance sat_to_mv(const CnfFormula& f);

// Same construction without the disjoint-triple requirement. A satisfying
// assignment still yields a mutually visible set of size k, but the
// matching upper bound is no longer guaranteed by the certificate.
MVInstance sat_to_mv_relaxed(const CnfFormula& f);

// Point set of size k for a (claimed) satisfying assignment.
PointSet assignment_to_points(const MVInstance& instance, const std::vector<bool>& assignment);

// Reads the assignment back from a point set that contains exactly one of
// u_i, ubar_i for every variable.
std::vector<bool> points_to_assignment(const MVInstance& instance, const PointSet& points);

// Recomputes the partition into convex parts that covers every vertex and
// whose exact values sum to k. Throws when the instance lacks the disjoint
// clause triple or any certificate check fails.
int certify_upper_bound(const MVInstance& instance);

}  // namespace mvis
