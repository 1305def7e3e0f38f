#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualresist/cli.hpp"

namespace {

using dualresist::Command;
using dualresist::Method;
using dualresist::OutputFormat;
using dualresist::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& config, std::string& method,
                        std::string& format) {
    cmd->add_option("--graph", config.graph_path, "graph file (`n m` header, then `i j a_hat` lines)")
        ->required();
    cmd->add_option("--method", method, "computation route: mp, block or regularized")
        ->check(CLI::IsMember({"mp", "block", "regularized"}));
    cmd->add_option("--tolerance", config.tolerance,
                    "verification tolerance (default 1e-9, or DUALRESIST_TOL)");
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", config.seed, "seed for randomized verification");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-number perturbation analysis of unit-resistor networks"};
    app.require_subcommand(1);

    RunConfig config;
    config.tolerance = dualresist::default_tolerance();
    std::string method = "mp";
    std::string format = "text";
    int source = 0;
    int sink = 0;
    std::vector<int> edge;
    double a_hat = 0.0;

    CLI::App* resistance = app.add_subcommand(
        "resistance", "dual resistance distance between two vertices");
    add_common_options(resistance, config, method, format);
    resistance->add_option("--source", source, "source vertex (1-based)")->required();
    resistance->add_option("--sink", sink, "sink vertex (1-based)")->required();

    CLI::App* kirchhoff = app.add_subcommand("kirchhoff", "dual Kirchhoff index");
    add_common_options(kirchhoff, config, method, format);

    CLI::App* bounds =
        app.add_subcommand("bounds", "Kirchhoff perturbation and its upper bounds");
    add_common_options(bounds, config, method, format);

    CLI::App* report = app.add_subcommand(
        "report", "full perturbation report; --edge i j --a-hat x for single-edge mode");
    add_common_options(report, config, method, format);
    CLI::Option* edge_opt =
        report->add_option("--edge", edge, "edge {i, j} for single-edge analysis")
            ->expected(2);
    report->add_option("--a-hat", a_hat, "perturbation coefficient for --edge")
        ->needs(edge_opt);

    CLI::App* verify =
        app.add_subcommand("verify", "run the oracle agreement checks on the graph");
    add_common_options(verify, config, method, format);

    CLI11_PARSE(app, argc, argv);

    if (resistance->parsed()) {
        config.command = Command::resistance;
        config.source = source;
        config.sink = sink;
    } else if (kirchhoff->parsed()) {
        config.command = Command::kirchhoff;
    } else if (bounds->parsed()) {
        config.command = Command::bounds;
    } else if (report->parsed()) {
        config.command = Command::report;
        if (!edge.empty()) {
            config.edge = {edge[0], edge[1]};
            if (report->count("--a-hat") > 0) config.a_hat = a_hat;
        }
    } else if (verify->parsed()) {
        config.command = Command::verify;
    }

    const std::map<std::string, Method> methods{{"mp", Method::mp},
                                                {"block", Method::block},
                                                {"regularized", Method::regularized}};
    config.method = methods.at(method);
    config.format = format == "json" ? OutputFormat::json : OutputFormat::text;

    return dualresist::run(config, std::cout, std::cerr);
}
