#pragma once

#include <iosfwd>
#include <string>

#include "dualresist/graph.hpp"

namespace dualresist {

/// Graph text format:
///   line 1: `n m`
///   then m lines `i j a_hat` (1-based vertex ids, decimal a_hat)
/// `#`-prefixed lines are comments; tokens are whitespace-separated.
/// Throws ParseError with the offending line number.
PerturbedGraph parse_graph(std::istream& in);

/// Reads a graph file. Throws FileNotFound, ParseError.
PerturbedGraph load_graph_file(const std::string& path);

}  // namespace dualresist
