#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvis/graph.hpp"
#include "mvis/reduction.hpp"

namespace mvis {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

// Graph text: "n m" then m lines "u v" with 0 <= u < v < n. Lines that are
// blank or start with '#' are ignored.
Graph parse_graph_text(std::istream& in);

// Byte-stable output: optional comment lines, the header, then the edges in
// lexicographic order.
std::string emit_graph_text(const Graph& g, const std::vector<std::string>& comments = {});

// Whitespace-separated vertex ids with '#' comments running to end of line.
// Duplicates and ids outside 0..vertex_count-1 are rejected. Sorted output.
std::vector<int> parse_points_text(std::istream& in, int vertex_count);

std::string emit_points_text(const std::vector<int>& points,
                             const std::vector<std::string>& comments = {});

// DIMACS CNF restricted to three-literal clauses, one clause per line,
// zero-terminated. 'c' lines are comments.
CnfFormula parse_dimacs(std::istream& in);

std::string emit_dimacs(const CnfFormula& f, const std::vector<std::string>& comments = {});

}  // namespace mvis
