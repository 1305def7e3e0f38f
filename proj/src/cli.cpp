#include "dualresist/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualresist/errors.hpp"
#include "dualresist/graph_io.hpp"
#include "dualresist/linalg.hpp"
#include "dualresist/oracle.hpp"
#include "dualresist/perturbation.hpp"
#include "dualresist/resistance.hpp"

namespace dualresist {

namespace {

using nlohmann::json;

// 12 significant digits; -0 collapses to 0 so reports never show "-0".
std::string format_real(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_dual(double standard, double infinitesimal) {
    return format_real(standard) + " + (" + format_real(infinitesimal) + ")ε";
}

double json_num(double v) { return v == 0.0 ? 0.0 : v; }

json dual_json(double standard, double infinitesimal) {
    return {{"standard", json_num(standard)}, {"infinitesimal", json_num(infinitesimal)}};
}

KirchhoffMethod kirchhoff_method(Method m) {
    switch (m) {
        case Method::mp: return KirchhoffMethod::trace;
        case Method::block: return KirchhoffMethod::block;
        case Method::regularized: return KirchhoffMethod::one_inverse;
    }
    throw Error("unknown method");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::mp: return "mp";
        case Method::block: return "block";
        case Method::regularized: return "regularized";
    }
    return "?";
}

ResistanceValue resistance_by_method(const PerturbedGraph& g, int i, int j, Method m) {
    switch (m) {
        case Method::mp: return resistance_mp(g, i, j);
        case Method::block: return resistance_block(g, i, j);
        case Method::regularized: return resistance_regularized(g, i, j);
    }
    throw Error("unknown method");
}

struct VerifyCheck {
    std::string name;
    bool pass = false;
    bool skipped = false;
    double error = 0.0;
    std::string note;
};

std::vector<VerifyCheck> run_verify(const PerturbedGraph& g, const RunConfig& config) {
    std::vector<VerifyCheck> checks;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const double tol = config.tolerance;

    const DualMatrix lw = laplacian(g);
    const DualMatrix x = dual_laplacian_pinv(g);

    {
        VerifyCheck c;
        c.name = "mp_axioms";
        double defect = max_abs_diff(lw * x * lw, lw);
        defect = std::max(defect, max_abs_diff(x * lw * x, x));
        const DualMatrix ax = lw * x;
        const DualMatrix xa = x * lw;
        defect = std::max(defect, max_abs_diff(transpose(ax), ax));
        defect = std::max(defect, max_abs_diff(transpose(xa), xa));
        c.error = defect;
        c.pass = defect <= tol;
        checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "projector_identity";
        const DualMatrix residual =
            DualMatrix::identity(n) - lw * x -
            DualMatrix(Matrix(n, n, 1.0 / static_cast<double>(n)));
        c.error = max_abs(residual);
        c.pass = c.error <= tol;
        checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "three_way_agreement";
        double worst = 0.0;
        for (int i = 1; i <= g.vertex_count(); ++i) {
            for (int j = i + 1; j <= g.vertex_count(); ++j) {
                const ResistanceValue a = resistance_mp(g, i, j);
                const ResistanceValue b = resistance_regularized(g, i, j);
                const ResistanceValue d = resistance_block(g, i, j);
                worst = std::max({worst, std::abs(a.standard - b.standard),
                                  std::abs(a.infinitesimal - b.infinitesimal),
                                  std::abs(a.standard - d.standard),
                                  std::abs(a.infinitesimal - d.infinitesimal)});
            }
        }
        c.error = worst;
        c.pass = worst <= tol;
        checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "fd_agreement";
        const std::vector<double> steps{1e-2, 1e-3, 1e-4};
        double worst = 0.0;
        for (int i = 1; i <= g.vertex_count(); ++i)
            for (int j = i + 1; j <= g.vertex_count(); ++j)
                worst = std::max(worst,
                                 finite_difference_resistance(g, i, j, steps).agreement_error);
        c.error = worst;
        c.pass = worst <= 1e-5;  // limited by the step sizes, not by `tol`
        checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "tree_counts";
        if (g.vertex_count() > 10 || g.edge_count() > 20) {
            c.skipped = true;
            c.pass = true;
            c.note = "beyond enumeration budget (n <= 10, m <= 20)";
        } else {
            const TreeCountOracle oracle = brute_force_spanning_trees(g);
            bool ok = oracle.tau == spanning_tree_count(g);
            double worst = 0.0;
            for (const Edge& e : g.edges()) {
                const std::int64_t tau_e = spanning_trees_containing_edge(g, e.i, e.j);
                ok = ok && oracle.per_edge.at({e.i, e.j}) == tau_e;
                const double tree_ratio = static_cast<double>(tau_e) /
                                     static_cast<double>(oracle.tau);
                worst = std::max(worst,
                                 std::abs(resistance_mp(g, e.i, e.j).standard - tree_ratio));
            }
            c.error = worst;
            c.pass = ok && worst <= 1e-9;
        }
        checks.push_back(c);
    }
    {
        VerifyCheck c;
        c.name = "member_independence";
        c.pass = one_inverse_member_independence(g, 10, config.seed);
        checks.push_back(c);
    }
    return checks;
}

int dispatch(const RunConfig& config, const PerturbedGraph& g, std::ostream& out,
             std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    json result;
    std::ostringstream text;
    const char* command_name = "";
    int exit_code = 0;

    switch (config.command) {
        case Command::resistance: {
            command_name = "resistance";
            if (!config.source || !config.sink) {
                err << "error: resistance requires --source and --sink\n";
                return 2;
            }
            const ResistanceValue r =
                resistance_by_method(g, *config.source, *config.sink, config.method);
            text << "R[" << *config.source << "," << *config.sink
                 << "] = " << format_dual(r.standard, r.infinitesimal) << "\n";
            result = {{"source", *config.source},
                      {"sink", *config.sink},
                      {"method", method_name(config.method)},
                      {"resistance", dual_json(r.standard, r.infinitesimal)}};
            break;
        }
        case Command::kirchhoff: {
            command_name = "kirchhoff";
            const KirchhoffValue kf = kirchhoff_index(g, kirchhoff_method(config.method));
            text << "Kf = " << format_dual(kf.standard, kf.infinitesimal) << "\n";
            result = {{"method", method_name(config.method)},
                      {"kf", dual_json(kf.standard, kf.infinitesimal)}};
            break;
        }
        case Command::bounds: {
            command_name = "bounds";
            const PerturbationReport rep = perturbation_report(g);
            text << "ΔKf = " << format_real(rep.delta_kf) << "\n"
                 << "bound_eigsum = " << format_real(rep.bound_eigsum) << " ("
                 << (rep.eigsum_holds ? "holds" : "VIOLATED") << ")\n"
                 << "bound_specrad = " << format_real(rep.bound_specrad) << " ("
                 << (rep.specrad_holds ? "holds" : "VIOLATED") << ")\n";
            result = {{"kf", dual_json(rep.kf.standard, rep.kf.infinitesimal)},
                      {"delta_kf", json_num(rep.delta_kf)},
                      {"bound_eigsum", json_num(rep.bound_eigsum)},
                      {"bound_specrad", json_num(rep.bound_specrad)},
                      {"bounds_hold",
                       {{"eigsum", rep.eigsum_holds}, {"specrad", rep.specrad_holds}}}};
            break;
        }
        case Command::report: {
            command_name = "report";
            if (config.edge) {
                if (!config.a_hat) {
                    err << "error: single-edge mode requires --a-hat\n";
                    return 2;
                }
                const EdgePerturbationResult res = single_edge_analysis(
                    g, config.edge->first, config.edge->second, *config.a_hat);
                text << "edge {" << res.i << "," << res.j
                     << "}, a_hat = " << format_real(res.a_hat) << "\n"
                     << "ΔR[" << res.i << "," << res.j
                     << "] = " << format_real(res.delta_r) << " (resistance route)\n"
                     << "ΔR[" << res.i << "," << res.j
                     << "] = " << format_real(res.delta_r_tree) << " (tree route, τ = "
                     << res.tau << ", τ(e) = " << res.tau_e << ")\n";
                result = {{"edge", {res.i, res.j}},
                          {"a_hat", json_num(res.a_hat)},
                          {"delta_r", json_num(res.delta_r)},
                          {"delta_r_tree", json_num(res.delta_r_tree)},
                          {"tau", res.tau},
                          {"tau_e", res.tau_e},
                          {"kf_ratio_bounds",
                           {{"lower", json_num(res.kf_ratio_lower)},
                            {"upper", json_num(res.kf_ratio_upper)}}}};
                if (res.kf_ratio) {
                    text << "ΔKf/(-2nâ) = " << format_real(*res.kf_ratio)
                         << " in [" << format_real(res.kf_ratio_lower) << ", "
                         << format_real(res.kf_ratio_upper) << "]\n";
                    result["kf_ratio"] = json_num(*res.kf_ratio);
                } else {
                    text << "ΔKf/(-2nâ) undefined (a_hat = 0)\n";
                }
            } else {
                const PerturbationReport rep = perturbation_report(g);
                text << "Kf = " << format_dual(rep.kf.standard, rep.kf.infinitesimal) << "\n"
                     << "ΔKf = " << format_real(rep.delta_kf) << "\n"
                     << "bound_eigsum = " << format_real(rep.bound_eigsum) << " ("
                     << (rep.eigsum_holds ? "holds" : "VIOLATED") << ")\n"
                     << "bound_specrad = " << format_real(rep.bound_specrad) << " ("
                     << (rep.specrad_holds ? "holds" : "VIOLATED") << ")\n";
                text << "eig(L) =";
                for (double v : rep.eig_laplacian) text << " " << format_real(v);
                text << "\neig(L_hat) =";
                for (double v : rep.eig_perturbation) text << " " << format_real(v);
                text << "\n";
                json eig_l = json::array();
                for (double v : rep.eig_laplacian) eig_l.push_back(json_num(v));
                json eig_h = json::array();
                for (double v : rep.eig_perturbation) eig_h.push_back(json_num(v));
                result = {{"kf", dual_json(rep.kf.standard, rep.kf.infinitesimal)},
                          {"delta_kf", json_num(rep.delta_kf)},
                          {"bound_eigsum", json_num(rep.bound_eigsum)},
                          {"bound_specrad", json_num(rep.bound_specrad)},
                          {"eig_laplacian", eig_l},
                          {"eig_perturbation", eig_h},
                          {"bounds_hold",
                           {{"eigsum", rep.eigsum_holds}, {"specrad", rep.specrad_holds}}}};
            }
            break;
        }
        case Command::verify: {
            command_name = "verify";
            const std::vector<VerifyCheck> checks = run_verify(g, config);
            bool all_pass = true;
            json jchecks = json::array();
            for (const VerifyCheck& c : checks) {
                all_pass = all_pass && c.pass;
                if (c.skipped) {
                    text << "skip " << c.name << " (" << c.note << ")\n";
                } else {
                    text << (c.pass ? "ok   " : "FAIL ") << c.name << " (max error "
                         << format_real(c.error) << ")\n";
                }
                json jc = {{"name", c.name}, {"pass", c.pass}, {"error", json_num(c.error)}};
                if (c.skipped) jc["skipped"] = true;
                if (!c.note.empty()) jc["note"] = c.note;
                jchecks.push_back(jc);
            }
            text << (all_pass ? "all checks passed" : "VERIFICATION FAILED") << "\n";
            result = {{"checks", jchecks}, {"all_pass", all_pass}};
            if (!all_pass) exit_code = 1;
            break;
        }
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
            .count();

    if (config.format == OutputFormat::json) {
        const json doc = {{"command", command_name},
                          {"graph", {{"n", g.vertex_count()}, {"m", g.edge_count()}}},
                          {"result", result},
                          {"timing_ms", ms}};
        out << doc.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return exit_code;
}

}  // namespace

double default_tolerance() {
    if (const char* env = std::getenv("DUALRESIST_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-9;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const PerturbedGraph g = load_graph_file(config.graph_path);
        return dispatch(config, g, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dualresist
