#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "mvis/classes.hpp"
#include "mvis/generators.hpp"
#include "mvis/graph.hpp"
#include "mvis/io.hpp"
#include "mvis/reduction.hpp"
#include "mvis/solver.hpp"
#include "mvis/visibility.hpp"

namespace py = pybind11;

namespace {

mvis::PointSet as_points(const mvis::Graph& g, const std::vector<int>& members) {
    return mvis::PointSet::from_members(g.vertex_count(), members);
}

py::dict solve_dict(const mvis::SolveResult& r) {
    py::dict out;
    out["mu"] = r.mu;
    out["witness"] = r.witness.members();
    out["optimal"] = r.optimal;
    out["nodes"] = r.stats.nodes;
    out["seconds"] = r.stats.seconds;
    return out;
}

py::dict class_dict(const mvis::ClassResult& r) {
    py::dict out;
    out["mu"] = r.mu;
    out["witness"] = r.witness.members();
    out["cls"] = mvis::to_string(r.class_tag);
    return out;
}

mvis::SolveOptions make_options(bool canonical, double budget_seconds, int threads) {
    mvis::SolveOptions options;
    options.canonical = canonical;
    options.budget_seconds = budget_seconds;
    options.threads = threads;
    return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mutual visibility sets in undirected graphs";

    py::class_<mvis::Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<mvis::Edge>& edges) {
                 return mvis::Graph::from_edge_list(n, edges);
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &mvis::Graph::vertex_count)
        .def_property_readonly("edge_count", &mvis::Graph::edge_count)
        .def("degree", &mvis::Graph::degree, py::arg("v"))
        .def("adjacent", &mvis::Graph::adjacent, py::arg("u"), py::arg("v"))
        .def(
            "neighbors",
            [](const mvis::Graph& g, int v) {
                auto row = g.neighbors(v);
                return std::vector<int>(row.begin(), row.end());
            },
            py::arg("v"))
        .def("edges", &mvis::Graph::edges)
        .def("__eq__", [](const mvis::Graph& a, const mvis::Graph& b) { return a == b; })
        .def("__repr__", [](const mvis::Graph& g) {
            std::ostringstream out;
            out << "Graph(" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)";
            return out.str();
        });

    py::class_<mvis::MVInstance>(m, "MVInstance")
        .def_readonly("graph", &mvis::MVInstance::graph)
        .def_readonly("k", &mvis::MVInstance::k)
        .def_readonly("variable_count", &mvis::MVInstance::variable_count)
        .def_readonly("clause_count", &mvis::MVInstance::clause_count);

    py::class_<mvis::CnfFormula>(m, "CnfFormula")
        .def(py::init([](int variables, const std::vector<mvis::Clause>& clauses) {
                 mvis::CnfFormula f{variables, clauses};
                 mvis::validate(f);
                 return f;
             }),
             py::arg("variable_count"), py::arg("clauses"))
        .def_readonly("variable_count", &mvis::CnfFormula::variable_count)
        .def_readonly("clauses", &mvis::CnfFormula::clauses);

    // structure
    m.def("bfs_distances", &mvis::bfs_distances, py::arg("graph"), py::arg("source"));
    m.def("connected_components", &mvis::connected_components, py::arg("graph"));
    m.def("articulation_vertices", &mvis::articulation_vertices, py::arg("graph"));
    m.def("geodesic_interval", &mvis::geodesic_interval, py::arg("graph"), py::arg("u"),
          py::arg("v"));
    m.def(
        "convex_hull",
        [](const mvis::Graph& g, const std::vector<int>& seed) {
            return mvis::convex_hull(g, seed);
        },
        py::arg("graph"), py::arg("seed"));
    m.def(
        "is_convex",
        [](const mvis::Graph& g, const std::vector<int>& vertices) {
            return mvis::is_convex(g, vertices);
        },
        py::arg("graph"), py::arg("vertices"));

    // visibility
    m.def(
        "is_mv_set",
        [](const mvis::Graph& g, const std::vector<int>& points) {
            return mvis::is_mv_set(g, as_points(g, points));
        },
        py::arg("graph"), py::arg("points"));
    m.def(
        "visible",
        [](const mvis::Graph& g, const std::vector<int>& points, int u, int v) {
            return mvis::visible(g, as_points(g, points), u, v);
        },
        py::arg("graph"), py::arg("points"), py::arg("u"), py::arg("v"));
    m.def(
        "witness_path",
        [](const mvis::Graph& g, const std::vector<int>& points, int u, int v) {
            return mvis::witness_path(g, as_points(g, points), u, v);
        },
        py::arg("graph"), py::arg("points"), py::arg("u"), py::arg("v"));

    // solving
    m.def(
        "mu_bruteforce",
        [](const mvis::Graph& g, int limit) { return solve_dict(mvis::mu_bruteforce(g, limit)); },
        py::arg("graph"), py::arg("limit") = 20);
    m.def(
        "mu_exact",
        [](const mvis::Graph& g, bool canonical, double budget_seconds, int threads) {
            mvis::SolveResult r;
            {
                py::gil_scoped_release release;
                r = mvis::mu_exact(g, make_options(canonical, budget_seconds, threads));
            }
            return solve_dict(r);
        },
        py::arg("graph"), py::arg("canonical") = false, py::arg("budget_seconds") = 0.0,
        py::arg("threads") = 0);
    m.def(
        "mu_decision",
        [](const mvis::Graph& g, int k, bool canonical, double budget_seconds, int threads) {
            mvis::DecisionResult r;
            {
                py::gil_scoped_release release;
                r = mvis::mu_decision(g, k, make_options(canonical, budget_seconds, threads));
            }
            py::dict out;
            out["verdict"] = r.verdict == mvis::Verdict::yes
                                 ? "yes"
                                 : r.verdict == mvis::Verdict::no ? "no" : "unknown";
            out["witness"] =
                r.witness ? py::cast(r.witness->members()) : py::object(py::none());
            out["nodes"] = r.stats.nodes;
            return out;
        },
        py::arg("graph"), py::arg("k"), py::arg("canonical") = false,
        py::arg("budget_seconds") = 0.0, py::arg("threads") = 0);
    m.def(
        "all_max_sets",
        [](const mvis::Graph& g, int limit) {
            std::vector<std::vector<int>> out;
            for (const auto& s : mvis::all_max_sets(g, limit)) out.push_back(s.members());
            return out;
        },
        py::arg("graph"), py::arg("limit") = 16);
    m.def("mu_upper_bound_partition", &mvis::mu_upper_bound_partition, py::arg("graph"),
          py::arg("parts"));
    m.def("greedy_clique", &mvis::greedy_clique, py::arg("graph"));

    // closed forms
    m.def("mu_path", [](int n) { return class_dict(mvis::mu_path(n)); }, py::arg("n"));
    m.def("mu_cycle", [](int n) { return class_dict(mvis::mu_cycle(n)); }, py::arg("n"));
    m.def(
        "mu_tree", [](const mvis::Graph& g) { return class_dict(mvis::mu_tree(g)); },
        py::arg("graph"));
    m.def(
        "mu_block_graph",
        [](const mvis::Graph& g) { return class_dict(mvis::mu_block_graph(g)); },
        py::arg("graph"));
    m.def(
        "mu_grid", [](int m_, int n_) { return class_dict(mvis::mu_grid(m_, n_)); }, py::arg("m"),
        py::arg("n"));
    m.def(
        "mu_complete_bipartite",
        [](int m_, int n_) { return class_dict(mvis::mu_complete_bipartite(m_, n_)); },
        py::arg("m"), py::arg("n"));
    m.def(
        "mu_join",
        [](const mvis::Graph& a, const mvis::Graph& b) { return class_dict(mvis::mu_join(a, b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "mu_cograph", [](const mvis::Graph& g) { return class_dict(mvis::mu_cograph(g)); },
        py::arg("graph"));
    m.def(
        "mu_formula",
        [](const mvis::Graph& g) -> py::object {
            auto r = mvis::mu_formula(g);
            return r ? py::object(class_dict(*r)) : py::object(py::none());
        },
        py::arg("graph"));
    m.def(
        "classify",
        [](const mvis::Graph& g) {
            auto r = mvis::classify(g);
            py::dict out;
            out["mu_is_one"] = r.mu_is_one;
            out["mu_is_two"] = r.mu_is_two;
            out["mu_is_vertex_count"] = r.mu_is_vertex_count;
            out["mu_is_edge_count"] = r.mu_is_edge_count;
            return out;
        },
        py::arg("graph"));
    m.def(
        "mu_torus_bound",
        [](int m_, int n_) {
            auto fact = mvis::mu_torus_bound(m_, n_);
            py::dict out;
            out["bound"] = fact.bound;
            out["attained"] = fact.attained == mvis::TorusFact::Attained::yes
                                  ? "yes"
                                  : fact.attained == mvis::TorusFact::Attained::no ? "no"
                                                                                   : "unknown";
            return out;
        },
        py::arg("m"), py::arg("n"));

    // generators
    m.def("path_graph", &mvis::path_graph, py::arg("n"));
    m.def("cycle_graph", &mvis::cycle_graph, py::arg("n"));
    m.def("complete_graph", &mvis::complete_graph, py::arg("n"));
    m.def("complete_bipartite_graph", &mvis::complete_bipartite_graph, py::arg("m"), py::arg("n"));
    m.def("star_graph", &mvis::star_graph, py::arg("leaves"));
    m.def("grid_graph", &mvis::grid_graph, py::arg("m"), py::arg("n"));
    m.def("torus_graph", &mvis::torus_graph, py::arg("m"), py::arg("n"));
    m.def("join_graphs", &mvis::join_graphs, py::arg("a"), py::arg("b"));
    m.def("disjoint_union", &mvis::disjoint_union, py::arg("a"), py::arg("b"));
    m.def("random_tree", &mvis::random_tree, py::arg("n"), py::arg("seed"));
    m.def("random_block_graph", &mvis::random_block_graph, py::arg("n"), py::arg("seed"));
    m.def("random_connected_cograph", &mvis::random_connected_cograph, py::arg("n"),
          py::arg("seed"));
    m.def("random_graph", &mvis::random_graph, py::arg("n"), py::arg("percent"), py::arg("seed"));

    // reduction
    m.def("validate", &mvis::validate, py::arg("formula"));
    m.def("satisfies", &mvis::satisfies, py::arg("formula"), py::arg("assignment"));
    m.def("find_satisfying_assignment", &mvis::find_satisfying_assignment, py::arg("formula"),
          py::arg("max_variables") = 24);
    m.def("ensure_disjoint_clauses", &mvis::ensure_disjoint_clauses, py::arg("formula"));
    m.def("sat_to_mv", &mvis::sat_to_mv, py::arg("formula"));
    m.def("sat_to_mv_relaxed", &mvis::sat_to_mv_relaxed, py::arg("formula"));
    m.def(
        "assignment_to_points",
        [](const mvis::MVInstance& instance, const std::vector<bool>& assignment) {
            return mvis::assignment_to_points(instance, assignment).members();
        },
        py::arg("instance"), py::arg("assignment"));
    m.def(
        "points_to_assignment",
        [](const mvis::MVInstance& instance, const std::vector<int>& points) {
            return mvis::points_to_assignment(
                instance, mvis::PointSet::from_members(instance.graph.vertex_count(), points));
        },
        py::arg("instance"), py::arg("points"));
    m.def("certify_upper_bound", &mvis::certify_upper_bound, py::arg("instance"));

    // text formats
    m.def(
        "parse_graph_text",
        [](const std::string& text) {
            std::istringstream in(text);
            return mvis::parse_graph_text(in);
        },
        py::arg("text"));
    m.def(
        "emit_graph_text",
        [](const mvis::Graph& g) { return mvis::emit_graph_text(g); },
        py::arg("graph"));
    m.def(
        "parse_dimacs",
        [](const std::string& text) {
            std::istringstream in(text);
            return mvis::parse_dimacs(in);
        },
        py::arg("text"));
    m.def(
        "emit_dimacs",
        [](const mvis::CnfFormula& f) { return mvis::emit_dimacs(f); },
        py::arg("formula"));
}
