#include "dualresist/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dualresist/errors.hpp"

namespace dualresist {

namespace {

// Pulls the next content line (skipping blanks and # comments); false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_number) {
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

PerturbedGraph parse_graph(std::istream& in) {
    std::string line;
    int line_number = 0;

    if (!next_content_line(in, line, line_number))
        throw ParseError(line_number + 1, "missing header line `n m`");
    int n = 0;
    int m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError(line_number, "expected header `n m`, got: " + line);
        if (n < 1) throw ParseError(line_number, "vertex count must be at least 1");
        if (m < 0) throw ParseError(line_number, "edge count must be nonnegative");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (!next_content_line(in, line, line_number))
            throw ParseError(line_number + 1, "expected " + std::to_string(m) +
                                              " edge lines, found " + std::to_string(k));
        std::istringstream es(line);
        Edge e;
        std::string extra;
        if (!(es >> e.i >> e.j >> e.a_hat) || (es >> extra))
            throw ParseError(line_number, "expected edge line `i j a_hat`, got: " + line);
        edges.push_back(e);
    }
    if (next_content_line(in, line, line_number))
        throw ParseError(line_number, "unexpected content after " + std::to_string(m) +
                                      " edge lines: " + line);

    try {
        return {n, std::move(edges)};
    } catch (const ValidationError& err) {
        throw ParseError(line_number, err.what());
    }
}

PerturbedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open graph file: " + path);
    return parse_graph(in);
}

}  // namespace dualresist
