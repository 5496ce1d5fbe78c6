#include "mvis/io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace mvis {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

// Content lines with 1-based numbers; blank and '#' comment lines dropped.
std::vector<Line> content_lines(std::istream& in, char comment_char) {
    std::vector<Line> out;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        std::size_t start = text.find_first_not_of(" \t\r");
        if (start == std::string::npos || text[start] == comment_char) continue;
        out.push_back({number, text.substr(start)});
    }
    return out;
}

std::vector<long long> parse_integers(const Line& line) {
    std::istringstream stream(line.text);
    std::vector<long long> out;
    std::string token;
    while (stream >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw ParseError(line.number, "expected an integer, got \"" + token + "\"");
        }
        if (used != token.size())
            throw ParseError(line.number, "expected an integer, got \"" + token + "\"");
        out.push_back(value);
    }
    return out;
}

}  // namespace

Graph parse_graph_text(std::istream& in) {
    auto lines = content_lines(in, '#');
    if (lines.empty()) throw ParseError(1, "missing \"n m\" header");
    auto header = parse_integers(lines.front());
    if (header.size() != 2)
        throw ParseError(lines.front().number, "header must be \"n m\"");
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw ParseError(lines.front().number, "negative header value");
    if (static_cast<long long>(lines.size()) - 1 < m) {
        int last = lines.back().number;
        throw ParseError(last + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                       std::to_string(lines.size() - 1));
    }
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError(lines[static_cast<std::size_t>(m) + 1].number,
                         "unexpected content after " + std::to_string(m) + " edges");
    std::vector<Edge> edges;
    std::unordered_set<long long> seen;
    for (long long i = 0; i < m; ++i) {
        const Line& line = lines[static_cast<std::size_t>(i) + 1];
        auto values = parse_integers(line);
        if (values.size() != 2) throw ParseError(line.number, "edge line must be \"u v\"");
        long long u = values[0], v = values[1];
        if (u < 0 || v >= n || u >= v)
            throw ParseError(line.number, "edge must satisfy 0 <= u < v < n");
        if (!seen.insert(u * n + v).second)
            throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " +
                                              std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_graph_text(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& comment : comments) out << "# " << comment << "\n";
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    out << g.vertex_count() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

std::vector<int> parse_points_text(std::istream& in, int vertex_count) {
    auto raw_lines = [&] {
        std::vector<Line> out;
        std::string text;
        int number = 0;
        while (std::getline(in, text)) {
            ++number;
            std::size_t hash = text.find('#');
            if (hash != std::string::npos) text.erase(hash);
            out.push_back({number, text});
        }
        return out;
    }();
    std::vector<int> points;
    std::unordered_set<int> seen;
    for (const Line& line : raw_lines) {
        for (long long value : parse_integers(line)) {
            if (value < 0 || value >= vertex_count)
                throw ParseError(line.number, "vertex " + std::to_string(value) +
                                                  " out of range for a graph with " +
                                                  std::to_string(vertex_count) + " vertices");
            if (!seen.insert(static_cast<int>(value)).second)
                throw ParseError(line.number, "duplicate vertex " + std::to_string(value));
            points.push_back(static_cast<int>(value));
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

std::string emit_points_text(const std::vector<int>& points,
                             const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& comment : comments) out << "# " << comment << "\n";
    for (int v : points) out << v << "\n";
    return out.str();
}

CnfFormula parse_dimacs(std::istream& in) {
    auto lines = content_lines(in, 'c');
    if (lines.empty()) throw ParseError(1, "missing \"p cnf\" header");
    const Line& head = lines.front();
    std::istringstream header(head.text);
    std::string p, cnf;
    long long variables = -1, clause_count = -1;
    header >> p >> cnf >> variables >> clause_count;
    if (p != "p" || cnf != "cnf" || variables < 0 || clause_count < 0 || !header ||
        !(header >> std::ws).eof())
        throw ParseError(head.number, "header must be \"p cnf <variables> <clauses>\"");

    CnfFormula out;
    out.variable_count = static_cast<int>(variables);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        auto values = parse_integers(line);
        if (values.empty() || values.back() != 0)
            throw ParseError(line.number, "clause line must end with 0");
        values.pop_back();
        if (std::find(values.begin(), values.end(), 0) != values.end())
            throw ParseError(line.number, "literals after the terminating 0");
        if (values.size() != 3)
            throw ParseError(line.number, "clause has " + std::to_string(values.size()) +
                                              " literals, expected exactly 3");
        Clause clause{};
        for (int j = 0; j < 3; ++j) {
            long long lit = values[j];
            if (std::abs(lit) > variables)
                throw ParseError(line.number, "literal " + std::to_string(lit) +
                                                  " references a variable beyond the header");
            clause[j] = static_cast<int>(lit);
        }
        auto sorted = clause;
        std::sort(sorted.begin(), sorted.end());
        if (sorted[0] == sorted[1] || sorted[1] == sorted[2])
            throw ParseError(line.number, "clause repeats a literal");
        out.clauses.push_back(clause);
    }
    if (static_cast<long long>(out.clauses.size()) != clause_count)
        throw ParseError(lines.back().number + 1,
                         "header declares " + std::to_string(clause_count) + " clauses, found " +
                             std::to_string(out.clauses.size()));
    return out;
}

std::string emit_dimacs(const CnfFormula& f, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& comment : comments) out << "c " << comment << "\n";
    out << "p cnf " << f.variable_count << " " << f.clauses.size() << "\n";
    for (const Clause& clause : f.clauses)
        out << clause[0] << " " << clause[1] << " " << clause[2] << " 0\n";
    return out.str();
}

}  // namespace mvis
