#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace dualresist {

enum class Command { resistance, kirchhoff, bounds, report, verify };
enum class Method { mp, block, regularized };
enum class OutputFormat { text, json };

struct RunConfig {
    Command command = Command::resistance;
    std::string graph_path;
    std::optional<int> source;
    std::optional<int> sink;
    Method method = Method::mp;
    double tolerance = 1e-9;
    OutputFormat format = OutputFormat::text;
    std::optional<std::pair<int, int>> edge;  // single-edge mode (report)
    std::optional<double> a_hat;
    unsigned seed = 42;
};

/// Default tolerance: DUALRESIST_TOL from the environment, else 1e-9.
double default_tolerance();

/// Executes one command. Exit codes: 0 success, 2 validation errors (bad
/// file, disconnected graph, bad vertices; diagnostic on `err`), 1 internal
/// numerical failure or failed verification.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dualresist
