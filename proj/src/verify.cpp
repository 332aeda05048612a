#include "ghgeom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "ghgeom/correspondence.hpp"
#include "ghgeom/generators.hpp"
#include "ghgeom/geodesic.hpp"
#include "ghgeom/interval_union.hpp"
#include "ghgeom/kuratowski.hpp"
#include "ghgeom/metric_space.hpp"
#include "ghgeom/metric_tree.hpp"
#include "ghgeom/reference.hpp"
#include "ghgeom/tree_report.hpp"
#include "ghgeom/ultrametric.hpp"

namespace ghgeom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Residual normalized by its pinned tolerance; a zero tolerance demands
/// exactness.
double norm_residual(double r, double limit) {
    r = std::fabs(r);
    if (limit > 0.0) return r / limit;
    return r == 0.0 ? 0.0 : kInf;
}

struct Check {
    double worst = 0.0;
    bool failed = false;

    void expect(double residual, double limit) {
        double v = norm_residual(residual, limit);
        worst = std::max(worst, v);
        if (v > 1.0) failed = true;
    }
    void expect_true(bool ok) {
        if (!ok) {
            worst = kInf;
            failed = true;
        }
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int scaled(int pinned, const VerifyOptions& opts) {
    return opts.trials_override > 0 ? std::min(pinned, opts.trials_override) : pinned;
}

using Runner = void (*)(const VerifyOptions&, CriterionResult&);

CriterionResult run_criterion(const std::string& id, const std::string& name,
                              const VerifyOptions& opts, Runner body) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    Stopwatch clock;
    body(opts, res);
    res.runtime_ms = clock.ms();
    res.pass = res.failures == 0 && res.worst <= 1.0;
    return res;
}

// --- 1: gh_exact(X, one-point) == diam(X) / 2 -------------------------------

void c1_delta1(const VerifyOptions& opts, CriterionResult& res) {
    const int trials = scaled(50, opts);
    const FiniteMetricSpace one = FiniteMetricSpace::point("*", opts.eps);
    for (int i = 0; i < trials; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 100 + i));
        const int n = 2 + static_cast<int>(rng() % 7);
        FiniteMetricSpace x =
            random_euclidean_space(n, mix_seed(opts.seed, 150 + i), 10.0, 3, 0.05, opts.eps);
        Check ck;
        ck.expect(2.0 * gh_exact(x, one).value - diameter(x), opts.eps);
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
}

// --- 2: gh between ultrametrizations never exceeds gh ------------------------

void c2_ultra_bound(const VerifyOptions& opts, CriterionResult& res) {
    const int trials = scaled(200, opts);
    const GhBudget budget{30};
    for (int i = 0; i < trials; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 200 + i));
        const int nx = 2 + static_cast<int>(rng() % 4);
        const int ny = 2 + static_cast<int>(rng() % 4);
        FiniteMetricSpace x =
            random_euclidean_space(nx, mix_seed(opts.seed, 250 + i), 10.0, 3, 0.05, opts.eps);
        FiniteMetricSpace y =
            random_euclidean_space(ny, mix_seed(opts.seed, 299 + i), 10.0, 3, 0.05, opts.eps);
        const double lhs = gh_lower_ultra(x, y, budget);
        const double rhs = gh_exact(x, y, budget).value;
        Check ck;
        ck.expect(std::max(0.0, lhs - rhs), opts.eps);
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
}

// --- 3: single-linkage minimax == Floyd DP == dotted-line enumeration --------

void c3_minimax_oracle(const VerifyOptions& opts, CriterionResult& res) {
    const int trials = scaled(100, opts);
    for (int i = 0; i < trials; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 300 + i));
        const int n = 2 + static_cast<int>(rng() % 6);
        FiniteMetricSpace x =
            random_euclidean_space(n, mix_seed(opts.seed, 350 + i), 10.0, 3, 0.05, opts.eps);
        const Matrix fast = minimax_matrix(x);
        const Matrix floyd = reference::minimax_floyd(x.matrix());
        const Matrix paths = reference::minimax_paths(x.matrix());
        double diff = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                diff = std::max({diff, std::fabs(fast(a, b) - floyd(a, b)),
                                 std::fabs(fast(a, b) - paths(a, b))});
        Check ck;
        ck.expect(diff, 0.0);  // pure selections of input entries: bit-exact
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
}

// --- 4: boundary condition => u_diam == 2 d_H(X, T) --------------------------

void c4_tree_identity(const VerifyOptions& opts, CriterionResult& res) {
    const int trials = scaled(100, opts);
    for (int i = 0; i < trials; ++i) {
        MetricTree tree({"?"}, {});
        std::vector<TreePoint> pts;
        double pin_dh = -1.0, pin_u = -1.0;
        if (i == 0) {
            // Pinned: segment [0, 10], X = {0, 3, 10}.
            tree = MetricTree({"a", "b"}, {{0, 1, 10.0}}, opts.eps);
            pts = {TreePoint::at_vertex(tree, 0), TreePoint::on_edge(tree, 0, 3.0),
                   TreePoint::at_vertex(tree, 1)};
            pin_dh = 3.5;
            pin_u = 7.0;
        } else if (i == 1) {
            // Pinned: star with three legs of length 5, X = the leaves.
            ExampleSpec spec;
            spec.kind = "star";
            spec.legs = 3;
            spec.leg_length = 5.0;
            auto [t, x] = make_example(spec);
            tree = std::move(t);
            pts = x.points;
            pin_dh = 5.0;
            pin_u = 10.0;
        } else {
            ExampleSpec spec;
            std::mt19937_64 rng(mix_seed(opts.seed, 400 + i));
            switch (i % 4) {
                case 0:
                    spec.kind = "segment-net";
                    spec.length = 2.0 + static_cast<double>(rng() % 1000) / 100.0;
                    spec.net_step = spec.length / (2.0 + static_cast<double>(rng() % 5));
                    break;
                case 1:
                    spec.kind = "star";
                    spec.legs = 2 + static_cast<int>(rng() % 4);
                    spec.leg_length = 1.0 + static_cast<double>(rng() % 500) / 100.0;
                    break;
                case 2:
                    spec.kind = "caterpillar";
                    spec.spine = 2 + static_cast<int>(rng() % 4);
                    spec.leg_length = 0.5 + static_cast<double>(rng() % 300) / 100.0;
                    break;
                default:
                    spec.kind = "random";
                    spec.size = 3 + static_cast<int>(rng() % 7);
                    spec.subset = 2 + static_cast<int>(rng() % 4);
                    spec.seed = mix_seed(opts.seed, 450 + i);
                    break;
            }
            auto [t, x] = make_example(spec);
            tree = std::move(t);
            pts = x.points;
        }
        TreeSubsetX x(tree, pts);
        TreeReport rep = tree_report(tree, x);
        Check ck;
        if (pin_dh >= 0.0) {
            ck.expect(rep.d_h - pin_dh, opts.eps);
            ck.expect(rep.u_diam - pin_u, opts.eps);
            ck.expect_true(rep.condition != BoundaryCondition::Fails);
        }
        if (rep.condition != BoundaryCondition::Fails)
            ck.expect(rep.identity_residual, opts.eps);
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
}

// --- 5: sharpness instance where the condition fails -------------------------

void c5_sharpness(const VerifyOptions& opts, CriterionResult& res) {
    MetricTree tree({"a", "b"}, {{0, 1, 10.0}}, opts.eps);
    TreeSubsetX x(tree, {TreePoint::at_vertex(tree, 0), TreePoint::on_edge(tree, 0, 3.0)});
    TreeReport rep = tree_report(tree, x);
    Check ck;
    ck.expect_true(rep.condition == BoundaryCondition::Fails);
    ck.expect(rep.d_h - 7.0, opts.eps);
    ck.expect(rep.boundary_gap - 7.0, opts.eps);
    ck.expect(rep.u_diam - 3.0, opts.eps);
    res.worst = ck.worst;
    res.failures = ck.failed ? 1 : 0;
    res.trials = 1;
}

// --- 6: slices of the canonical geodesic are additive ------------------------

void c6_geodesic(const VerifyOptions& opts, CriterionResult& res) {
    const int trials = scaled(50, opts);
    for (int i = 0; i < trials; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 600 + i));
        const int n = 2 + static_cast<int>(rng() % 7);
        MetricTree tree = random_tree(n, mix_seed(opts.seed, 650 + i), 0.5, 2.5, opts.eps);
        auto random_union = [&](std::uint64_t salt) {
            const int k = 1 + static_cast<int>(rng() % 3);
            IntervalUnion s = IntervalUnion::from_points(
                tree, random_tree_subset(tree, k, mix_seed(opts.seed, salt + i)));
            if (tree.edge_count() > 0 && rng() % 2 == 0) {
                const int e = static_cast<int>(rng() % tree.edge_count());
                const double len = tree.edge(e).length;
                double a = len * static_cast<double>(rng() % 1000) / 1000.0;
                double b = len * static_cast<double>(rng() % 1000) / 1000.0;
                s.add(e, std::min(a, b), std::max(a, b));
                s.normalize();
            }
            return s;
        };
        IntervalUnion a = random_union(700);
        IntervalUnion b = random_union(760);
        const double d = hausdorff_subsets(a, b);
        std::vector<double> grid{0.0};
        const int k = 2 + static_cast<int>(rng() % 3);
        for (int g = 0; g < k; ++g)
            grid.push_back(d * static_cast<double>(rng() % 1001) / 1000.0);
        grid.push_back(d);
        std::sort(grid.begin(), grid.end());
        GeodesicCheck check = verify_geodesic(a, b, grid);
        Check ck;
        ck.expect(check.worst_residual, 1e-9);  // pinned additivity tolerance
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
}

// --- 7: 5x5 sup-norm grid patch ----------------------------------------------

void c7_grid_patch(const VerifyOptions& opts, CriterionResult& res) {
    FiniteMetricSpace patch = grid_space(5, 5, 1.0, opts.eps);
    Check ck;
    // (a) minimax distances are identically 1 off the diagonal.
    Matrix u = minimax_matrix(patch);
    double diff = 0.0;
    for (int i = 0; i < u.size(); ++i)
        for (int j = 0; j < u.size(); ++j)
            if (i != j) diff = std::max(diff, std::fabs(u(i, j) - 1.0));
    ck.expect(diff, 0.0);
    // (b) gh_exact between the ultrametric quotient and the one-point space
    // is exactly 1/2.
    UltrametricResult ur = ultrametrize(patch);
    const double gh =
        gh_exact(ur.quotient, FiniteMetricSpace::point("*", opts.eps), GhBudget{30}).value;
    ck.expect(gh - 0.5, 0.0);
    // (c) dense sampling of the continuous patch against the grid: the
    // farthest sample sits at sup-distance 1/2, within the sampling pitch.
    const double step = 0.05;
    double far = 0.0;
    const int cells = static_cast<int>(std::lround(4.0 / step));
    for (int a = 0; a <= cells; ++a)
        for (int b = 0; b <= cells; ++b) {
            const double px = a * step, py = b * step;
            double near = kInf;
            for (int gx = 0; gx < 5; ++gx)
                for (int gy = 0; gy < 5; ++gy)
                    near = std::min(near,
                                    std::max(std::fabs(px - gx), std::fabs(py - gy)));
            far = std::max(far, near);
        }
    ck.expect(far - 0.5, 0.05);
    res.worst = ck.worst;
    res.failures = ck.failed ? 1 : 0;
    res.trials = 1;
}

// --- 8: Kuratowski embedding and the sampled complex D_t ----------------------

void c8_kuratowski(const VerifyOptions& opts, CriterionResult& res) {
    const int trials = scaled(50, opts);
    for (int i = 0; i < trials; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 800 + i));
        const int n = 2 + static_cast<int>(rng() % 5);
        FiniteMetricSpace x =
            random_euclidean_space(n, mix_seed(opts.seed, 850 + i), 10.0, 3, 0.05, opts.eps);
        Check ck;
        ck.expect(embedding_residual(x, kuratowski_embed(x)), 1e-12);
        Matrix u = minimax_matrix(x);
        double udiam = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) udiam = std::max(udiam, u(a, b));
        const Tol tol{opts.eps};
        for (double factor : {0.5, 1.0, 2.0}) {
            const double t = factor * udiam;
            DtCheckResult dt = dt_check(x, t, 0.0, GhBudget{opts.budget_cells});
            const bool expect_connected = tol.ge(t, udiam);
            ck.expect_true(dt.x_threshold_connected == dt.complex_connected);
            ck.expect_true(dt.x_threshold_connected == expect_connected);
            ck.expect(std::max(0.0, dt.correspondence_distortion - t), opts.eps);
            if (dt.gh_cross)
                ck.expect(std::max(0.0, *dt.gh_cross - dt.gh_cross_limit), opts.eps);
        }
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
}

// --- 9: gh_exact self-consistency ---------------------------------------------

void c9_gh_consistency(const VerifyOptions& opts, CriterionResult& res) {
    const GhBudget budget{30};
    // (a) symmetry, value and witness.
    int sym = scaled(30, opts);
    for (int i = 0; i < sym; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 900 + i));
        const int nx = 2 + static_cast<int>(rng() % 3);
        const int ny = 2 + static_cast<int>(rng() % 3);
        FiniteMetricSpace x =
            random_euclidean_space(nx, mix_seed(opts.seed, 910 + i), 10.0, 3, 0.05, opts.eps);
        FiniteMetricSpace y =
            random_euclidean_space(ny, mix_seed(opts.seed, 920 + i), 10.0, 3, 0.05, opts.eps);
        GHResult ab = gh_exact(x, y, budget);
        GHResult ba = gh_exact(y, x, budget);
        Check ck;
        ck.expect(ab.value - ba.value, 0.0);
        ck.expect_true(ba.witness.transposed().pairs == ab.witness.pairs);
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
    // (b) triangle inequality.
    int tri = scaled(100, opts);
    for (int i = 0; i < tri; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 930 + i));
        auto make = [&](std::uint64_t salt) {
            const int n = 2 + static_cast<int>(rng() % 3);
            return random_euclidean_space(n, mix_seed(opts.seed, salt + i), 10.0, 3, 0.05,
                                          opts.eps);
        };
        FiniteMetricSpace x = make(940), y = make(950), z = make(960);
        const double xz = gh_exact(x, z, budget).value;
        const double xy = gh_exact(x, y, budget).value;
        const double yz = gh_exact(y, z, budget).value;
        Check ck;
        ck.expect(std::max(0.0, xz - xy - yz), 1e-12);
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
    // (c) agreement with exhaustive relation enumeration.
    int enu = scaled(20, opts);
    for (int i = 0; i < enu; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed, 970 + i));
        const int nx = 2 + static_cast<int>(rng() % 3);
        const int ny = 2 + static_cast<int>(rng() % 3);  // nx * ny <= 16 by construction
        FiniteMetricSpace x =
            random_euclidean_space(nx, mix_seed(opts.seed, 980 + i), 10.0, 3, 0.05, opts.eps);
        FiniteMetricSpace y =
            random_euclidean_space(ny, mix_seed(opts.seed, 990 + i), 10.0, 3, 0.05, opts.eps);
        Check ck;
        ck.expect(gh_exact(x, y, budget).value - reference::gh_enumerate(x, y), 0.0);
        res.worst = std::max(res.worst, ck.worst);
        if (ck.failed) ++res.failures;
        ++res.trials;
    }
}

// --- 10: performance gates -----------------------------------------------------

void c10_performance(const VerifyOptions& opts, CriterionResult& res) {
    FiniteMetricSpace x = random_euclidean_space(5, mix_seed(opts.seed, 1000), 10.0, 3, 0.05,
                                                 opts.eps);
    FiniteMetricSpace y = random_euclidean_space(5, mix_seed(opts.seed, 1001), 10.0, 3, 0.05,
                                                 opts.eps);
    Stopwatch clock;
    (void)gh_exact(x, y, GhBudget{30});
    const double gh_ms = clock.ms();
    res.trials = 1;
    res.worst = gh_ms / 60000.0;  // pinned: one 5x5 pair under a minute
    if (res.worst > 1.0) ++res.failures;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opts) {
    VerificationReport report;
    report.seed = opts.seed;
    report.eps = opts.eps;
    report.trials_override = opts.trials_override;
    Stopwatch total;

    report.criteria.push_back(run_criterion("1", "delta1-identity", opts, c1_delta1));
    report.criteria.push_back(run_criterion("2", "ultrametric-bound", opts, c2_ultra_bound));
    report.criteria.push_back(run_criterion("3", "minimax-oracle", opts, c3_minimax_oracle));
    report.criteria.push_back(run_criterion("4", "tree-identity", opts, c4_tree_identity));
    report.criteria.push_back(run_criterion("5", "sharpness", opts, c5_sharpness));
    report.criteria.push_back(run_criterion("6", "geodesic-additivity", opts, c6_geodesic));
    report.criteria.push_back(run_criterion("7", "grid-patch", opts, c7_grid_patch));
    report.criteria.push_back(run_criterion("8", "kuratowski-dt", opts, c8_kuratowski));
    report.criteria.push_back(run_criterion("9", "gh-self-consistency", opts, c9_gh_consistency));
    report.criteria.push_back(run_criterion("10", "performance", opts, c10_performance));

    report.total_ms = total.ms();
    // Second half of the performance gate: the full suite stays under five
    // minutes.
    CriterionResult& perf = report.criteria.back();
    perf.worst = std::max(perf.worst, report.total_ms / 300000.0);
    perf.pass = perf.failures == 0 && perf.worst <= 1.0;

    report.pass = true;
    for (const CriterionResult& c : report.criteria) report.pass = report.pass && c.pass;
    return report;
}

}  // namespace ghgeom
