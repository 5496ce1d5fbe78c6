"""End-to-end smoke tests for the python bindings.

The heavy cross-checking lives in the C++ suites; this file only confirms
that the bindings expose the same behaviour through python types.
"""

import pytest

import mvis


def cycle(n):
    return mvis.cycle_graph(n)


def test_graph_shape():
    g = mvis.grid_graph(3, 4)
    assert g.vertex_count == 12
    assert g.edge_count == 17
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 5)
    assert g.neighbors(5) == [1, 4, 6, 9]
    assert g.degree(0) == 2


def test_graph_from_edges():
    g = mvis.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert mvis.connected_components(g) == [[0, 1, 2, 3]]


def test_verifier_and_witness_paths():
    g = cycle(6)
    assert mvis.is_mv_set(g, [0, 2, 3])
    assert not mvis.is_mv_set(g, [0, 1, 3, 4])
    assert mvis.witness_path(g, [0, 2, 3], 0, 3) == [0, 5, 4, 3]
    assert mvis.witness_path(g, [0, 1, 3, 4], 0, 3) is None


def test_solver_and_canonical_witness():
    r = mvis.mu_exact(mvis.grid_graph(3, 4), canonical=True)
    assert r["mu"] == 6
    assert r["witness"] == [0, 2, 4, 7, 9, 10]
    assert r["optimal"]


def test_unique_maximum_set_of_grid44():
    sets = mvis.all_max_sets(mvis.grid_graph(4, 4))
    assert sets == [[1, 2, 4, 7, 8, 11, 13, 14]]


def test_decision():
    g = mvis.grid_graph(3, 4)
    yes = mvis.mu_decision(g, 6)
    assert yes["verdict"] == "yes"
    assert mvis.is_mv_set(g, yes["witness"])
    assert mvis.mu_decision(g, 7)["verdict"] == "no"


def test_closed_forms():
    assert mvis.mu_cycle(6)["witness"] == [0, 2, 3]
    assert mvis.mu_grid(4, 4)["mu"] == 8
    assert mvis.mu_complete_bipartite(3, 5)["mu"] == 6
    tree = mvis.random_tree(9, 7)
    leaves = sum(1 for v in range(9) if tree.degree(v) == 1)
    assert mvis.mu_tree(tree)["mu"] == leaves


def test_formula_dispatch():
    assert mvis.mu_formula(mvis.path_graph(6))["cls"] == "path"
    assert mvis.mu_formula(mvis.grid_graph(3, 4)) is None


def test_classify():
    report = mvis.classify(mvis.complete_graph(5))
    assert report["mu_is_vertex_count"]
    assert not report["mu_is_one"]


def test_torus_bound():
    fact = mvis.mu_torus_bound(12, 12)
    assert fact == {"bound": 36, "attained": "yes"}
    assert mvis.mu_torus_bound(13, 13)["attained"] == "unknown"


def test_reduction_pipeline():
    f = mvis.CnfFormula(4, [[1, -2, 3], [2, -3, 4]])
    prepared = mvis.ensure_disjoint_clauses(f)
    inst = mvis.sat_to_mv(prepared)
    assert inst.k == 3 * inst.variable_count + inst.clause_count + 2
    assignment = mvis.find_satisfying_assignment(prepared)
    assert assignment is not None
    points = mvis.assignment_to_points(inst, assignment)
    assert len(points) == inst.k
    assert mvis.is_mv_set(inst.graph, points)
    assert mvis.certify_upper_bound(inst) == inst.k
    recovered = mvis.points_to_assignment(inst, points)
    assert mvis.satisfies(prepared, recovered)


def test_text_round_trip():
    g = mvis.grid_graph(2, 3)
    text = mvis.emit_graph_text(g)
    assert mvis.parse_graph_text(text) == g
    cnf = mvis.emit_dimacs(mvis.CnfFormula(3, [[1, 2, 3]]))
    parsed = mvis.parse_dimacs(cnf)
    assert parsed.variable_count == 3
    assert parsed.clauses == [[1, 2, 3]]


def test_convexity_helpers():
    g = cycle(6)
    assert sorted(mvis.convex_hull(g, [0, 3])) == [0, 1, 2, 3, 4, 5]
    assert mvis.geodesic_interval(g, 0, 2) == [0, 1, 2]
    assert mvis.is_convex(g, [0, 1, 2])


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        mvis.mu_bruteforce(mvis.grid_graph(5, 5))
    with pytest.raises(ValueError):
        mvis.cycle_graph(2)
    with pytest.raises(ValueError):
        mvis.CnfFormula(2, [[1, 2, 3]])


def test_parse_error_reports_line():
    with pytest.raises(RuntimeError) as err:
        mvis.parse_graph_text("4 2\n0 1\n")
    assert "line" in str(err.value)
