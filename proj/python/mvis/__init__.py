"""Mutual visibility sets in undirected graphs.

Thin wrapper over the compiled extension. Vertices are 0-based ints, point
sets are sorted lists, and solver results come back as plain dicts.
"""

from mvis._core import (
    CnfFormula,
    Graph,
    MVInstance,
    all_max_sets,
    articulation_vertices,
    assignment_to_points,
    bfs_distances,
    certify_upper_bound,
    classify,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    convex_hull,
    cycle_graph,
    disjoint_union,
    emit_dimacs,
    emit_graph_text,
    ensure_disjoint_clauses,
    find_satisfying_assignment,
    geodesic_interval,
    greedy_clique,
    grid_graph,
    is_convex,
    is_mv_set,
    join_graphs,
    mu_block_graph,
    mu_bruteforce,
    mu_complete_bipartite,
    mu_cograph,
    mu_cycle,
    mu_decision,
    mu_exact,
    mu_formula,
    mu_grid,
    mu_join,
    mu_path,
    mu_torus_bound,
    mu_tree,
    mu_upper_bound_partition,
    parse_dimacs,
    parse_graph_text,
    path_graph,
    points_to_assignment,
    random_block_graph,
    random_connected_cograph,
    random_graph,
    random_tree,
    sat_to_mv,
    sat_to_mv_relaxed,
    satisfies,
    star_graph,
    torus_graph,
    validate,
    visible,
    witness_path,
)

__all__ = [
    "CnfFormula",
    "Graph",
    "MVInstance",
    "all_max_sets",
    "articulation_vertices",
    "assignment_to_points",
    "bfs_distances",
    "certify_upper_bound",
    "classify",
    "complete_bipartite_graph",
    "complete_graph",
    "connected_components",
    "convex_hull",
    "cycle_graph",
    "disjoint_union",
    "emit_dimacs",
    "emit_graph_text",
    "ensure_disjoint_clauses",
    "find_satisfying_assignment",
    "geodesic_interval",
    "greedy_clique",
    "grid_graph",
    "is_convex",
    "is_mv_set",
    "join_graphs",
    "mu_block_graph",
    "mu_bruteforce",
    "mu_complete_bipartite",
    "mu_cograph",
    "mu_cycle",
    "mu_decision",
    "mu_exact",
    "mu_formula",
    "mu_grid",
    "mu_join",
    "mu_path",
    "mu_torus_bound",
    "mu_tree",
    "mu_upper_bound_partition",
    "parse_dimacs",
    "parse_graph_text",
    "path_graph",
    "points_to_assignment",
    "random_block_graph",
    "random_connected_cograph",
    "random_graph",
    "random_tree",
    "sat_to_mv",
    "sat_to_mv_relaxed",
    "satisfies",
    "star_graph",
    "torus_graph",
    "validate",
    "visible",
    "witness_path",
]
