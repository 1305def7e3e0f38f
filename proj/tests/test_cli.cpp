#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dualresist/cli.hpp"

using namespace dualresist;
using nlohmann::json;

namespace {

// Writes a graph file under the build directory and returns its path.
std::string write_graph(const std::string& name, const std::string& content) {
    const std::string path = "cli_" + name + ".txt";
    std::ofstream out(path);
    out << content;
    return path;
}

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_config(RunConfig config) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

const std::string kP2 = write_graph("p2", "2 1\n1 2 0.5\n");
const std::string kK3 = write_graph("k3", "3 3\n1 2 0\n2 3 0\n1 3 0\n");
const std::string kK3e = write_graph("k3e", "3 3\n1 2 1\n2 3 0\n1 3 0\n");
const std::string kDisconnected = write_graph("disc", "3 1\n1 2 0\n");

}  // namespace

TEST_CASE("resistance command, text output") {
    RunConfig config;
    config.command = Command::resistance;
    config.graph_path = kP2;
    config.source = 1;
    config.sink = 2;
    const CliResult res = run_config(config);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "R[1,2] = 1 + (-0.5)ε\n");
}

TEST_CASE("kirchhoff command, text output") {
    RunConfig config;
    config.command = Command::kirchhoff;
    config.graph_path = kK3;
    const CliResult res = run_config(config);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "Kf = 2 + (0)ε\n");
}

TEST_CASE("json reports follow the schema and round-trip") {
    RunConfig config;
    config.command = Command::bounds;
    config.graph_path = kK3e;
    config.format = OutputFormat::json;
    const CliResult res = run_config(config);
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["command"] == "bounds");
    CHECK(doc["graph"]["n"] == 3);
    CHECK(doc["graph"]["m"] == 3);
    CHECK(doc.contains("timing_ms"));
    const json& result = doc["result"];
    CHECK(std::abs(result["delta_kf"].get<double>() + 2.0 / 3.0) <= 1e-9);
    CHECK(std::abs(result["bound_eigsum"].get<double>() - 2.0 / 3.0) <= 1e-9);
    CHECK(std::abs(result["bound_specrad"].get<double>() - 4.0 / 3.0) <= 1e-9);
    CHECK(result["bounds_hold"]["eigsum"] == true);
    CHECK(result["bounds_hold"]["specrad"] == true);

    // Every numeric field is a finite decimal.
    std::function<void(const json&)> walk = [&](const json& node) {
        if (node.is_number_float()) CHECK(std::isfinite(node.get<double>()));
        if (node.is_object() || node.is_array())
            for (const auto& child : node) walk(child);
    };
    walk(doc);
}

TEST_CASE("the three methods agree within the configured tolerance") {
    for (Command command : {Command::resistance, Command::kirchhoff}) {
        double standards[3];
        double infinitesimals[3];
        int k = 0;
        for (Method method : {Method::mp, Method::block, Method::regularized}) {
            RunConfig config;
            config.command = command;
            config.graph_path = kK3e;
            config.source = 1;
            config.sink = 2;
            config.method = method;
            config.format = OutputFormat::json;
            const CliResult res = run_config(config);
            REQUIRE(res.exit_code == 0);
            const json doc = json::parse(res.out);
            const json& value = command == Command::resistance
                                    ? doc["result"]["resistance"]
                                    : doc["result"]["kf"];
            standards[k] = value["standard"].get<double>();
            infinitesimals[k] = value["infinitesimal"].get<double>();
            ++k;
        }
        for (int a = 1; a < 3; ++a) {
            CHECK(std::abs(standards[a] - standards[0]) <= 1e-9);
            CHECK(std::abs(infinitesimals[a] - infinitesimals[0]) <= 1e-9);
        }
    }
}

TEST_CASE("single-edge report") {
    RunConfig config;
    config.command = Command::report;
    config.graph_path = kK3e;
    config.edge = {1, 2};
    config.a_hat = 1.0;
    config.format = OutputFormat::json;
    const CliResult res = run_config(config);
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    const json& result = doc["result"];
    CHECK(result["tau"] == 3);
    CHECK(result["tau_e"] == 2);
    CHECK(std::abs(result["delta_r"].get<double>() + 4.0 / 9.0) <= 1e-9);
    CHECK(std::abs(result["delta_r_tree"].get<double>() + 4.0 / 9.0) <= 1e-9);
    CHECK(std::abs(result["kf_ratio"].get<double>() - 1.0 / 9.0) <= 1e-9);

    // a_hat = 0 reports no ratio at all.
    config.a_hat = 0.0;
    const CliResult zero = run_config(config);
    REQUIRE(zero.exit_code == 0);
    CHECK_FALSE(json::parse(zero.out)["result"].contains("kf_ratio"));
}

TEST_CASE("verify command") {
    RunConfig config;
    config.command = Command::verify;
    config.graph_path = kK3e;
    const CliResult res = run_config(config);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("all checks passed") != std::string::npos);

    config.format = OutputFormat::json;
    const CliResult jres = run_config(config);
    CHECK(jres.exit_code == 0);
    const json doc = json::parse(jres.out);
    CHECK(doc["result"]["all_pass"] == true);
    CHECK(doc["result"]["checks"].size() >= 5);
}

TEST_CASE("validation failures exit with code 2") {
    RunConfig config;
    config.command = Command::kirchhoff;
    config.graph_path = "no_such_file.txt";
    CHECK(run_config(config).exit_code == 2);

    config.graph_path = kDisconnected;
    const CliResult disc = run_config(config);
    CHECK(disc.exit_code == 2);
    CHECK(disc.err.find("connected") != std::string::npos);

    RunConfig bad_vertex;
    bad_vertex.command = Command::resistance;
    bad_vertex.graph_path = kP2;
    bad_vertex.source = 1;
    bad_vertex.sink = 9;
    CHECK(run_config(bad_vertex).exit_code == 2);

    RunConfig no_sink;
    no_sink.command = Command::resistance;
    no_sink.graph_path = kP2;
    no_sink.source = 1;
    CHECK(run_config(no_sink).exit_code == 2);

    RunConfig bad_parse;
    bad_parse.command = Command::kirchhoff;
    bad_parse.graph_path = write_graph("bad", "2 1\nnot an edge\n");
    const CliResult parse_res = run_config(bad_parse);
    CHECK(parse_res.exit_code == 2);
    CHECK(parse_res.err.find("line 2") != std::string::npos);

    RunConfig missing_edge;
    missing_edge.command = Command::report;
    missing_edge.graph_path = kK3;
    missing_edge.edge = {1, 9};
    missing_edge.a_hat = 1.0;
    CHECK(run_config(missing_edge).exit_code == 2);
}

TEST_CASE("default tolerance honors DUALRESIST_TOL") {
    unsetenv("DUALRESIST_TOL");
    CHECK(default_tolerance() == 1e-9);
    setenv("DUALRESIST_TOL", "1e-7", 1);
    CHECK(default_tolerance() == 1e-7);
    setenv("DUALRESIST_TOL", "garbage", 1);
    CHECK(default_tolerance() == 1e-9);
    unsetenv("DUALRESIST_TOL");
}
