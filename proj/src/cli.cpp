#include "ghgeom/cli.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghgeom/correspondence.hpp"
#include "ghgeom/generators.hpp"
#include "ghgeom/geodesic.hpp"
#include "ghgeom/interval_union.hpp"
#include "ghgeom/io.hpp"
#include "ghgeom/kuratowski.hpp"
#include "ghgeom/metric_space.hpp"
#include "ghgeom/metric_tree.hpp"
#include "ghgeom/tree_report.hpp"
#include "ghgeom/ultrametric.hpp"
#include "ghgeom/verify.hpp"

namespace ghgeom {

namespace {

using io::json;

struct Common {
    std::string format = "json";
    std::string out_path;
    double eps = kDefaultEps;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--eps", c.eps, "Default tolerance for inputs that do not carry one");
}

void emit(const json& j, const Common& c, std::ostream& out) {
    const std::string text = io::render_report(j, io::format_from_string(c.format));
    if (c.out_path.empty())
        out << text;
    else
        io::save_text_file(c.out_path, text);
}

json verification_to_json(const VerificationReport& rep) {
    json criteria = json::array();
    for (const CriterionResult& c : rep.criteria)
        criteria.push_back({{"id", c.id},
                            {"name", c.name},
                            {"trials", c.trials},
                            {"failures", c.failures},
                            {"worst_residual", c.worst},
                            {"runtime_ms", c.runtime_ms},
                            {"pass", c.pass}});
    return json{{"seed", rep.seed},         {"eps", rep.eps},
                {"trials_override", rep.trials_override}, {"criteria", criteria},
                {"total_ms", rep.total_ms}, {"pass", rep.pass}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric geometry toolkit: Hausdorff and Gromov-Hausdorff distances,\n"
                 "ultrametrization, metric trees, geodesics, and sup-norm embeddings."};
    app.require_subcommand(1);

    // hausdorff
    Common h_common;
    std::string h_space, h_a, h_b;
    CLI::App* h_sub = app.add_subcommand("hausdorff", "Hausdorff distance between two subsets");
    h_sub->add_option("--space", h_space, "Metric space JSON file")->required();
    h_sub->add_option("--a", h_a, "First member-list JSON file")->required();
    h_sub->add_option("--b", h_b, "Second member-list JSON file")->required();
    add_common(h_sub, h_common);

    // gh
    Common g_common;
    std::string g_x, g_y, g_engine = "auto";
    int g_budget = 30;
    bool g_stats = false;
    CLI::App* g_sub = app.add_subcommand("gh", "Exact Gromov-Hausdorff distance");
    g_sub->add_option("--x", g_x, "First space JSON file")->required();
    g_sub->add_option("--y", g_y, "Second space JSON file")->required();
    g_sub->add_option("--budget-cells", g_budget, "Hard wall on |X|*|Y|");
    g_sub->add_option("--engine", g_engine, "Search engine")
        ->check(CLI::IsMember({"auto", "serial", "parallel"}));
    g_sub->add_flag("--stats", g_stats, "Include the schedule-dependent node counter");
    add_common(g_sub, g_common);

    // ultra
    Common u_common;
    std::string u_space;
    double u_t = 0.0;
    CLI::App* u_sub = app.add_subcommand("ultra", "Ultrametrization report");
    u_sub->add_option("--space", u_space, "Metric space JSON file")->required();
    CLI::Option* u_t_opt =
        u_sub->add_option("--t", u_t, "Also report whether {d <= t} is connected");
    add_common(u_sub, u_common);

    // tree-report
    Common t_common;
    std::string t_tree, t_subset;
    bool t_gh_check = false;
    int t_budget = 30;
    CLI::App* t_sub = app.add_subcommand("tree-report", "Boundary-condition report for X in T");
    t_sub->add_option("--tree", t_tree, "Tree JSON file")->required();
    t_sub->add_option("--subset", t_subset, "Tree subset JSON file")->required();
    t_sub->add_flag("--gh-check", t_gh_check, "Spot-check the quotient against a point");
    t_sub->add_option("--budget-cells", t_budget, "Budget for the spot check");
    add_common(t_sub, t_common);

    // geodesic
    Common e_common;
    std::string e_tree, e_a, e_b;
    std::vector<double> e_grid;
    int e_steps = 4;
    CLI::App* e_sub = app.add_subcommand("geodesic", "Canonical Hausdorff geodesic slices");
    e_sub->add_option("--tree", e_tree, "Tree JSON file")->required();
    e_sub->add_option("--a", e_a, "First interval-union JSON file")->required();
    e_sub->add_option("--b", e_b, "Second interval-union JSON file")->required();
    e_sub->add_option("--grid", e_grid, "Explicit parameter grid")->delimiter(',');
    e_sub->add_option("--steps", e_steps, "Uniform grid steps when --grid is absent");
    add_common(e_sub, e_common);

    // dt-check
    Common d_common;
    std::string d_space;
    double d_t = 0.0, d_delta = 0.0;
    int d_budget = 30;
    CLI::App* d_sub = app.add_subcommand("dt-check", "Sampled sup-norm complex D_t checks");
    d_sub->add_option("--space", d_space, "Metric space JSON file")->required();
    d_sub->add_option("--t", d_t, "Connection threshold")->required();
    d_sub->add_option("--delta", d_delta, "Sampling pitch (default t/10)");
    d_sub->add_option("--budget-cells", d_budget, "Budget for the GH cross-check");
    add_common(d_sub, d_common);

    // verify
    Common v_common;
    std::uint64_t v_seed = 7;
    int v_trials = 0;
    int v_budget = 30;
    CLI::App* v_sub = app.add_subcommand("verify", "Run the acceptance criteria");
    v_sub->add_option("--seed", v_seed, "Master seed");
    v_sub->add_option("--trials", v_trials, "Cap every randomized suite at this many trials");
    v_sub->add_option("--budget-cells", v_budget, "GH budget");
    add_common(v_sub, v_common);

    std::vector<const char*> argv{"ghgeom"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        json msg{{"error", "usage-error"}, {"message", e.what()}};
        err << msg.dump(2) << "\n";
        return 2;
    }

    try {
        if (*h_sub) {
            FiniteMetricSpace space =
                io::space_from_json(io::load_json_file(h_space), h_common.eps);
            SubsetRef a(space, io::members_from_json(io::load_json_file(h_a), space));
            SubsetRef b(space, io::members_from_json(io::load_json_file(h_b), space));
            json rep{{"oriented_ab", oriented_hausdorff(a, b)},
                     {"oriented_ba", oriented_hausdorff(b, a)},
                     {"distance", hausdorff(a, b)}};
            emit(rep, h_common, out);
            return 0;
        }
        if (*g_sub) {
            FiniteMetricSpace x = io::space_from_json(io::load_json_file(g_x), g_common.eps);
            FiniteMetricSpace y = io::space_from_json(io::load_json_file(g_y), g_common.eps);
            GhEngine engine = g_engine == "serial"
                                  ? GhEngine::Serial
                                  : g_engine == "parallel" ? GhEngine::Parallel : GhEngine::Auto;
            GHResult res = gh_exact(x, y, GhBudget{g_budget}, engine);
            json witness = json::array();
            for (const auto& [i, j] : res.witness.pairs)
                witness.push_back({x.labels()[i], y.labels()[j]});
            json rep{{"value", res.value}, {"witness", witness}, {"exact", res.exact}};
            if (g_stats) rep["nodes_explored"] = res.nodes_explored;
            emit(rep, g_common, out);
            return 0;
        }
        if (*u_sub) {
            FiniteMetricSpace space =
                io::space_from_json(io::load_json_file(u_space), u_common.eps);
            UltrametricResult ur = ultrametrize(space);
            json classes = json::array();
            for (const auto& cls : ur.classes) {
                json one = json::array();
                for (int i : cls) one.push_back(space.labels()[i]);
                classes.push_back(one);
            }
            json rep{{"u_matrix", ur.u_matrix.rows()},
                     {"classes", classes},
                     {"quotient", io::space_to_json(ur.quotient)},
                     {"connectivity_defect", connectivity_defect(space)}};
            if (u_t_opt->count() > 0) {
                rep["t"] = u_t;
                rep["threshold_connected"] = threshold_connected(space, u_t);
            }
            emit(rep, u_common, out);
            return 0;
        }
        if (*t_sub) {
            MetricTree tree = io::tree_from_json(io::load_json_file(t_tree), t_common.eps);
            TreeSubsetX x = io::subset_from_json(io::load_json_file(t_subset), tree);
            TreeReport r = tree_report(tree, x, t_gh_check, GhBudget{t_budget});
            json rep{{"d_h", r.d_h},
                     {"boundary_gap", r.boundary_gap},
                     {"condition", to_string(r.condition)},
                     {"u_diam", r.u_diam},
                     {"identity_checked", r.identity_checked},
                     {"identity_residual", r.identity_residual},
                     {"pass", r.pass}};
            if (r.gh_spot) rep["gh_spot"] = *r.gh_spot;
            emit(rep, t_common, out);
            return 0;
        }
        if (*e_sub) {
            MetricTree tree = io::tree_from_json(io::load_json_file(e_tree), e_common.eps);
            IntervalUnion a = io::intervals_from_json(io::load_json_file(e_a), tree);
            IntervalUnion b = io::intervals_from_json(io::load_json_file(e_b), tree);
            std::vector<double> grid = e_grid;
            if (grid.empty()) grid = uniform_grid(hausdorff_subsets(a, b), e_steps);
            GeodesicCheck check = verify_geodesic(a, b, grid);
            json slices = json::array();
            for (const IntervalUnion& s : check.slices) slices.push_back(io::intervals_to_json(s));
            json rep{{"d", check.d},
                     {"grid", check.grid},
                     {"pairwise", check.pairwise.rows()},
                     {"worst_residual", check.worst_residual},
                     {"additive", check.additive},
                     {"slices", slices}};
            emit(rep, e_common, out);
            return 0;
        }
        if (*d_sub) {
            FiniteMetricSpace space =
                io::space_from_json(io::load_json_file(d_space), d_common.eps);
            DtCheckResult r = dt_check(space, d_t, d_delta, GhBudget{d_budget});
            SampledComplex cx = build_dt(space, d_t, d_delta);
            json rep{{"t", d_t},
                     {"delta", cx.delta},
                     {"points", static_cast<int>(cx.points.size())},
                     {"segments", static_cast<int>(cx.segments.size())},
                     {"threshold_connected", r.x_threshold_connected},
                     {"complex_connected", r.complex_connected},
                     {"distortion", r.correspondence_distortion},
                     {"distortion_limit", r.distortion_limit},
                     {"gh_cross_limit", r.gh_cross_limit},
                     {"pass", r.pass}};
            rep["gh_cross"] = r.gh_cross ? json(*r.gh_cross) : json(nullptr);
            emit(rep, d_common, out);
            return 0;
        }
        if (*v_sub) {
            VerifyOptions opts;
            opts.seed = v_seed;
            opts.eps = v_common.eps;
            opts.budget_cells = v_budget;
            opts.trials_override = v_trials;
            VerificationReport report = run_verification(opts);
            emit(verification_to_json(report), v_common, out);
            return report.pass ? 0 : 1;
        }
    } catch (const Error& e) {
        json msg{{"error", to_string(e.kind())}, {"message", e.what()}, {"where", e.where()}};
        err << msg.dump(2) << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1)
}

}  // namespace ghgeom
