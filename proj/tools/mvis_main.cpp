#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mvis/classes.hpp"
#include "mvis/generators.hpp"
#include "mvis/graph.hpp"
#include "mvis/io.hpp"
#include "mvis/reduction.hpp"
#include "mvis/solver.hpp"
#include "mvis/visibility.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct CommandError {
    int code;
    std::string message;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw CommandError{kExitInput, "cannot open " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

mvis::Graph load_graph(const std::string& path) {
    std::istringstream in(read_source(path));
    return mvis::parse_graph_text(in);
}

std::vector<int> load_points(const std::string& path, int vertex_count) {
    std::istringstream in(read_source(path));
    return mvis::parse_points_text(in, vertex_count);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CommandError{kExitInput, "cannot write " + path};
    out << text;
}

int int_param(const std::vector<std::string>& params, std::size_t index,
              const std::string& name) {
    if (index >= params.size()) throw CommandError{kExitUsage, "missing parameter " + name};
    try {
        std::size_t used = 0;
        long long value = std::stoll(params[index], &used);
        if (used != params[index].size() || value < -(1ll << 31) || value > (1ll << 31))
            throw std::invalid_argument("range");
        return static_cast<int>(value);
    } catch (const std::exception&) {
        throw CommandError{kExitUsage, "parameter " + name + " must be an integer, got \"" +
                                           params[index] + "\""};
    }
}

std::uint64_t seed_param(const std::vector<std::string>& params, std::size_t index) {
    if (index >= params.size()) throw CommandError{kExitUsage, "missing seed parameter"};
    try {
        return std::stoull(params[index]);
    } catch (const std::exception&) {
        throw CommandError{kExitUsage, "seed must be a nonnegative integer"};
    }
}

json witness_json(const mvis::PointSet& points) {
    return json(points.members());
}

// Default to machine width; MV_THREADS caps whatever was requested.
int effective_threads(int requested) {
    int threads = requested > 0 ? requested
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (const char* env = std::getenv("MV_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && threads > cap) threads = cap;
    }
    return threads;
}

void print_class_result(const mvis::ClassResult& result, bool as_json, json out) {
    if (as_json) {
        out["mu"] = result.mu;
        out["class"] = mvis::to_string(result.class_tag);
        out["witness"] = witness_json(result.witness);
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "mu = " << result.mu << " (" << mvis::to_string(result.class_tag) << ")\n";
    std::cout << "witness:";
    for (int v : result.witness.members()) std::cout << " " << v;
    std::cout << "\n";
}

// ---------------------------------------------------------------- gen

struct GenOutput {
    mvis::Graph graph;
    std::vector<std::string> comments;
    std::string trailer;
    std::optional<std::vector<int>> witness;
};

GenOutput run_gen(const std::string& kind, const std::vector<std::string>& params,
                  bool want_witness, const std::string& assignment_bits) {
    GenOutput out;
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw CommandError{kExitUsage, "gen " + kind + " takes " + std::to_string(count) +
                                               " parameter(s)"};
    };
    if (kind == "path") {
        need(1);
        int n = int_param(params, 0, "n");
        out.graph = mvis::path_graph(n);
        out.comments = {"path " + std::to_string(n)};
        if (want_witness)
            out.witness = n == 1 ? std::vector<int>{0} : mvis::mu_path(n).witness.members();
    } else if (kind == "cycle") {
        need(1);
        int n = int_param(params, 0, "n");
        out.graph = mvis::cycle_graph(n);
        out.comments = {"cycle " + std::to_string(n)};
        if (want_witness) out.witness = mvis::mu_cycle(n).witness.members();
    } else if (kind == "grid" || kind == "torus") {
        need(2);
        int m = int_param(params, 0, "m");
        int n = int_param(params, 1, "n");
        out.graph = kind == "grid" ? mvis::grid_graph(m, n) : mvis::torus_graph(m, n);
        out.comments = {kind + " " + std::to_string(m) + " " + std::to_string(n),
                        "vertex (r, c) has id r * " + std::to_string(n) + " + c"};
        if (want_witness) {
            if (kind == "torus")
                throw CommandError{kExitUsage,
                                   "no witness construction is available for the torus"};
            out.witness = mvis::mu_grid(m, n).witness.members();
        }
    } else if (kind == "kbip") {
        need(2);
        int m = int_param(params, 0, "m");
        int n = int_param(params, 1, "n");
        out.graph = mvis::complete_bipartite_graph(m, n);
        out.comments = {"kbip " + std::to_string(m) + " " + std::to_string(n),
                        "parts 0.." + std::to_string(m - 1) + " and " + std::to_string(m) + ".." +
                            std::to_string(m + n - 1)};
        if (want_witness) out.witness = mvis::mu_complete_bipartite(m, n).witness.members();
    } else if (kind == "star") {
        need(1);
        int n = int_param(params, 0, "n");
        out.graph = mvis::star_graph(n);
        out.comments = {"star " + std::to_string(n) + ": centre 0, leaves 1.." + std::to_string(n)};
        if (want_witness) out.witness = mvis::mu_complete_bipartite(1, n).witness.members();
    } else if (kind == "tree-random") {
        need(2);
        int n = int_param(params, 0, "n");
        std::uint64_t seed = seed_param(params, 1);
        out.graph = mvis::random_tree(n, seed);
        out.comments = {"tree-random " + std::to_string(n) + " seed " + std::to_string(seed)};
        if (want_witness) out.witness = mvis::mu_tree(out.graph).witness.members();
    } else if (kind == "block-random") {
        need(2);
        int n = int_param(params, 0, "n");
        std::uint64_t seed = seed_param(params, 1);
        out.graph = mvis::random_block_graph(n, seed);
        out.comments = {"block-random " + std::to_string(n) + " seed " + std::to_string(seed)};
        if (want_witness) out.witness = mvis::mu_block_graph(out.graph).witness.members();
    } else if (kind == "reduce") {
        need(1);
        std::istringstream in(read_source(params[0]));
        mvis::CnfFormula parsed = mvis::parse_dimacs(in);
        mvis::CnfFormula prepared = mvis::ensure_disjoint_clauses(parsed);
        mvis::MVInstance instance = mvis::sat_to_mv(prepared);
        out.graph = instance.graph;
        out.comments = {"reduce " + params[0] + ": p = " + std::to_string(instance.variable_count) +
                        ", q = " + std::to_string(instance.clause_count)};
        out.trailer = "# K = 3p+q+2 = " + std::to_string(instance.k) + "\n";
        if (want_witness) {
            std::vector<bool> assignment;
            if (!assignment_bits.empty()) {
                if (static_cast<int>(assignment_bits.size()) != parsed.variable_count)
                    throw CommandError{kExitUsage,
                                       "--assignment needs one 0/1 digit per input variable"};
                for (char bit : assignment_bits) {
                    if (bit != '0' && bit != '1')
                        throw CommandError{kExitUsage, "--assignment digits must be 0 or 1"};
                    assignment.push_back(bit == '1');
                }
                assignment.resize(prepared.variable_count, false);
                if (!mvis::satisfies(prepared, assignment))
                    throw CommandError{kExitFalse, "the given assignment does not satisfy the formula"};
            } else {
                auto found = mvis::find_satisfying_assignment(prepared);
                if (!found)
                    throw CommandError{kExitFalse, "formula is unsatisfiable; no witness exists"};
                assignment = *found;
            }
            out.witness = mvis::assignment_to_points(instance, assignment).members();
        }
    } else {
        throw CommandError{kExitUsage, "unknown kind \"" + kind + "\""};
    }
    return out;
}

// ---------------------------------------------------------------- main

int run(int argc, char** argv) {
    CLI::App app{"mvis: mutual visibility sets in undirected graphs"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph (and optionally a witness)");
    std::string gen_kind;
    std::vector<std::string> gen_params;
    std::string gen_output;
    std::string gen_witness_file;
    bool gen_witness = false;
    std::string gen_assignment;
    gen->add_option("kind", gen_kind,
                    "one of: path, cycle, grid, torus, kbip, star, tree-random, block-random, "
                    "reduce")
        ->required();
    gen->add_option("params", gen_params, "kind parameters (see --help-all)");
    gen->add_option("-o,--output", gen_output, "graph output file (default: stdout)");
    gen->add_flag("--witness", gen_witness, "also emit a maximum set where a closed form exists");
    gen->add_option("--witness-file", gen_witness_file,
                    "witness output file (default: <output>.points or stdout)");
    gen->add_option("--assignment", gen_assignment,
                    "0/1 digits, one per variable, for reduce witnesses");

    // verify
    auto* verify = app.add_subcommand("verify", "check whether a point set is mutually visible");
    std::string verify_graph, verify_points;
    bool verify_explain = false, verify_json = false;
    std::vector<int> verify_pair;
    verify->add_option("graph", verify_graph, "graph file")->required();
    verify->add_option("points", verify_points, "points file")->required();
    verify->add_flag("--explain", verify_explain, "print a blocked pair when the answer is no");
    verify->add_option("--pair", verify_pair, "print a witness path for two points")
        ->expected(2);
    verify->add_flag("--json", verify_json, "machine readable output");

    // solve
    auto* solve = app.add_subcommand("solve", "compute the mutual visibility number");
    std::string solve_graph;
    int solve_decide = -1;
    bool solve_all = false, solve_canonical = false, solve_json = false;
    double solve_budget = 0.0;
    int solve_threads = 0;
    solve->add_option("graph", solve_graph, "graph file")->required();
    solve->add_option("--decide", solve_decide, "test for a set of at least this size");
    solve->add_flag("--all", solve_all, "enumerate every maximum set (small graphs only)");
    solve->add_flag("--canonical", solve_canonical, "report the lexicographically least witness");
    solve->add_option("--budget", solve_budget, "wall clock budget in seconds");
    solve->add_option("--threads", solve_threads, "worker threads (default: MV_THREADS or 1)");
    solve->add_flag("--json", solve_json, "machine readable output");

    // mu
    auto* mu = app.add_subcommand("mu", "closed-form value for a recognized graph class");
    std::vector<std::string> mu_args;
    bool mu_json = false;
    mu->add_option("input", mu_args,
                   "graph file, or a kind with parameters: path n | cycle n | grid m n | "
                   "torus m n | kbip m n | star n")
        ->required();
    mu->add_flag("--json", mu_json, "machine readable output");

    // classify
    auto* classify = app.add_subcommand("classify", "report which size characterizations apply");
    std::string classify_graph;
    bool classify_json = false;
    classify->add_option("graph", classify_graph, "graph file")->required();
    classify->add_flag("--json", classify_json, "machine readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (gen->parsed()) {
        GenOutput out = run_gen(gen_kind, gen_params, gen_witness || !gen_witness_file.empty(),
                                gen_assignment);
        std::string text = mvis::emit_graph_text(out.graph, out.comments) + out.trailer;
        write_output(gen_output, text);
        if (out.witness) {
            std::string points = mvis::emit_points_text(
                *out.witness, {"witness for " + gen_kind + ", size " +
                                   std::to_string(out.witness->size())});
            std::string destination = gen_witness_file;
            if (destination.empty())
                destination = gen_output.empty() || gen_output == "-" ? "" : gen_output + ".points";
            write_output(destination, points);
        }
        return kExitTrue;
    }

    if (verify->parsed()) {
        mvis::Graph g = load_graph(verify_graph);
        auto members = load_points(verify_points, g.vertex_count());
        auto points = mvis::PointSet::from_members(g.vertex_count(), members);
        bool verdict = mvis::is_mv_set(g, points);

        json out{{"command", "verify"}, {"verdict", verdict}, {"blocked_pair", nullptr},
                 {"reason", nullptr}, {"path", nullptr}};
        std::ostringstream text;
        text << "mutual-visibility set: " << (verdict ? "yes" : "no") << "\n";
        if (!verdict && verify_explain) {
            bool split_components = false;
            if (!members.empty()) {
                auto reach = mvis::bfs_distances(g, members.front());
                for (std::size_t i = 1; i < members.size(); ++i)
                    if (reach[members[i]] == mvis::kUnreachable) {
                        text << "blocked pair: " << members.front() << " " << members[i]
                             << " (reason: components)\n";
                        out["blocked_pair"] = json::array({members.front(), members[i]});
                        out["reason"] = "components";
                        split_components = true;
                        break;
                    }
            }
            if (!split_components) {
                for (std::size_t i = 0; i < members.size() && out["blocked_pair"].is_null(); ++i)
                    for (std::size_t j = i + 1; j < members.size(); ++j)
                        if (!mvis::visible(g, points, members[i], members[j])) {
                            text << "blocked pair: " << members[i] << " " << members[j]
                                 << " (no shortest path avoids the other points)\n";
                            out["blocked_pair"] = json::array({members[i], members[j]});
                            out["reason"] = "blocked";
                            break;
                        }
            }
        }
        if (verify_pair.size() == 2) {
            if (!points.contains(verify_pair[0]) || !points.contains(verify_pair[1]))
                throw CommandError{kExitUsage, "--pair vertices must belong to the point set"};
            auto path = mvis::witness_path(g, points, verify_pair[0], verify_pair[1]);
            if (path) {
                text << "path:";
                for (int v : *path) text << " " << v;
                text << "\n";
                out["path"] = json(*path);
            } else {
                text << "pair " << verify_pair[0] << " " << verify_pair[1] << " is blocked\n";
            }
        }
        if (verify_json)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << text.str();
        return verdict ? kExitTrue : kExitFalse;
    }

    if (solve->parsed()) {
        mvis::Graph g = load_graph(solve_graph);
        mvis::SolveOptions options;
        options.canonical = solve_canonical;
        options.budget_seconds = solve_budget;
        options.threads = effective_threads(solve_threads);

        if (solve_all) {
            std::vector<mvis::PointSet> sets;
            try {
                sets = mvis::all_max_sets(g);
            } catch (const std::invalid_argument& e) {
                throw CommandError{kExitUsage, e.what()};
            }
            int mu_value = sets.empty() ? 0 : sets.front().size();
            if (solve_json) {
                json out{{"command", "solve"}, {"mu", mu_value}, {"sets", json::array()}};
                for (const auto& s : sets) out["sets"].push_back(witness_json(s));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "mu = " << mu_value << "\n";
                std::cout << "maximum sets: " << sets.size() << "\n";
                for (const auto& s : sets) {
                    std::cout << " ";
                    for (int v : s.members()) std::cout << " " << v;
                    std::cout << "\n";
                }
            }
            return kExitTrue;
        }

        if (solve->count("--decide")) {
            auto result = mvis::mu_decision(g, solve_decide, options);
            if (solve_json) {
                json out{{"command", "solve"},
                         {"verdict", result.verdict == mvis::Verdict::yes
                                         ? json(true)
                                         : result.verdict == mvis::Verdict::no ? json(false)
                                                                               : json()},
                         {"witness", result.witness ? witness_json(*result.witness) : json()},
                         {"stats",
                          {{"nodes", result.stats.nodes}, {"seconds", result.stats.seconds}}}};
                std::cout << out.dump(2) << "\n";
            } else if (result.verdict == mvis::Verdict::yes) {
                std::cout << "decision: yes\n";
                std::cout << "witness:";
                for (int v : result.witness->members()) std::cout << " " << v;
                std::cout << "\n";
            } else if (result.verdict == mvis::Verdict::no) {
                std::cout << "decision: no\n";
            } else {
                std::cout << "decision: unknown (budget exhausted)\n";
            }
            return result.verdict == mvis::Verdict::yes ? kExitTrue : kExitFalse;
        }

        auto result = mvis::mu_exact(g, options);
        if (solve_json) {
            json out{{"command", "solve"},
                     {"mu", result.mu},
                     {"witness", witness_json(result.witness)},
                     {"flags",
                      {{"optimal", result.optimal}, {"canonical", solve_canonical}}},
                     {"stats", {{"nodes", result.stats.nodes}, {"seconds", result.stats.seconds}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "mu = " << result.mu;
            if (!result.optimal) std::cout << " (lower-bound only: budget exhausted)";
            std::cout << "\n";
            std::cout << "witness:";
            for (int v : result.witness.members()) std::cout << " " << v;
            std::cout << "\n";
            std::cout << "nodes = " << result.stats.nodes << ", seconds = " << result.stats.seconds
                      << "\n";
        }
        return kExitTrue;
    }

    if (mu->parsed()) {
        const std::string& first = mu_args.front();
        bool is_kind = first == "path" || first == "cycle" || first == "grid" ||
                       first == "torus" || first == "kbip" || first == "star";
        json out{{"command", "mu"}};
        if (is_kind) {
            std::vector<std::string> params(mu_args.begin() + 1, mu_args.end());
            if (first == "torus") {
                if (params.size() != 2)
                    throw CommandError{kExitUsage, "mu torus takes parameters m n"};
                auto fact = mvis::mu_torus_bound(int_param(params, 0, "m"),
                                                 int_param(params, 1, "n"));
                std::string attained = fact.attained == mvis::TorusFact::Attained::yes
                                           ? "yes"
                                           : fact.attained == mvis::TorusFact::Attained::no
                                                 ? "no"
                                                 : "unknown";
                if (mu_json) {
                    out["bound"] = fact.bound;
                    out["attained"] = attained;
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "bound " << fact.bound << ", attainment " << attained << "\n";
                }
                return kExitTrue;
            }
            mvis::ClassResult result;
            if (first == "path") {
                result = mvis::mu_path(int_param(params, 0, "n"));
            } else if (first == "cycle") {
                result = mvis::mu_cycle(int_param(params, 0, "n"));
            } else if (first == "grid") {
                result = mvis::mu_grid(int_param(params, 0, "m"), int_param(params, 1, "n"));
            } else if (first == "kbip") {
                result = mvis::mu_complete_bipartite(int_param(params, 0, "m"),
                                                     int_param(params, 1, "n"));
            } else {
                result = mvis::mu_complete_bipartite(1, int_param(params, 0, "n"));
            }
            print_class_result(result, mu_json, out);
            return kExitTrue;
        }
        if (mu_args.size() != 1)
            throw CommandError{kExitUsage, "mu takes either a graph file or a kind with params"};
        mvis::Graph g = load_graph(first);
        auto result = mvis::mu_formula(g);
        if (!result) {
            std::cout << "no closed form - use solve\n";
            return kExitFalse;
        }
        print_class_result(*result, mu_json, out);
        return kExitTrue;
    }

    if (classify->parsed()) {
        mvis::Graph g = load_graph(classify_graph);
        auto report = mvis::classify(g);
        int n = g.vertex_count();
        bool any = false;
        std::ostringstream text;
        if (report.mu_is_one) {
            text << "mu = 1 (empty graph)\n";
            any = true;
        }
        if (report.mu_is_two) {
            text << "mu = 2 (disjoint union of paths)\n";
            any = true;
        }
        if (report.mu_is_vertex_count) {
            text << "mu = |V| (complete)\n";
            any = true;
        }
        if (report.mu_is_edge_count) {
            text << "mu = |E| (" << (n == 3 && g.edge_count() == 3 ? "triangle" : "star") << ")\n";
            any = true;
        }
        if (!any) text << "no characterization case applies\n";
        if (classify_json) {
            json out{{"command", "classify"},
                     {"cases",
                      {{"mu_is_one", report.mu_is_one},
                       {"mu_is_two", report.mu_is_two},
                       {"mu_is_vertex_count", report.mu_is_vertex_count},
                       {"mu_is_edge_count", report.mu_is_edge_count}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << text.str();
        }
        return any ? kExitTrue : kExitFalse;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const mvis::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
