#include "ghgeom/tree_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "ghgeom/ultrametric.hpp"

namespace ghgeom {

const char* to_string(BoundaryCondition c) {
    switch (c) {
        case BoundaryCondition::BoundaryEmpty: return "boundary-empty";
        case BoundaryCondition::Holds: return "holds";
        case BoundaryCondition::Fails: return "fails";
    }
    return "?";
}

Classification classify(const MetricTree& tree, const TreeSubsetX& x) {
    if (tree.edge_count() == 0)
        return Classification{IntervalUnion(tree), IntervalUnion(tree)};
    IntervalUnion hull = IntervalUnion::from_points(tree, x);
    for (std::size_t i = 1; i < x.points.size(); ++i)
        hull = unite(hull, IntervalUnion::segment(tree, x.points[0], x.points[i]));
    IntervalUnion boundary = complement(hull);
    return Classification{std::move(hull), std::move(boundary)};
}

namespace {

/// Max over [0, len] of f(t) = min over sites of (h_s + |t - t_s|): the
/// envelope is piecewise linear with slopes +-1, so its max sits at an end
/// or where an ascending cone crosses a descending one.
double edge_envelope_max(double len, const std::vector<std::pair<double, double>>& sites) {
    std::vector<double> cand{0.0, len};
    for (const auto& [ti, hi] : sites) cand.push_back(ti);
    for (const auto& [ti, hi] : sites)
        for (const auto& [tj, hj] : sites) cand.push_back((hj - hi + ti + tj) / 2.0);
    double sup = 0.0;
    for (double t : cand) {
        t = std::clamp(t, 0.0, len);
        double f = std::numeric_limits<double>::infinity();
        for (const auto& [ts, hs] : sites) f = std::min(f, hs + std::fabs(t - ts));
        sup = std::max(sup, f);
    }
    return sup;
}

}  // namespace

double hausdorff_to_tree(const MetricTree& tree, const TreeSubsetX& x) {
    const int nv = tree.vertex_count();
    if (tree.edge_count() == 0) return 0.0;

    // Distance from every vertex to X.
    std::vector<double> field(nv, 0.0);
#pragma omp parallel for schedule(static) if (nv > 32)
    for (int v = 0; v < nv; ++v) {
        double best = std::numeric_limits<double>::infinity();
        TreePoint pv = TreePoint::at_vertex(tree, v);
        for (const TreePoint& p : x.points) best = std::min(best, tree_distance(tree, pv, p));
        field[v] = best;
    }

    const int ne = tree.edge_count();
    double sup = 0.0;
#pragma omp parallel for reduction(max : sup) schedule(dynamic) if (ne > 8)
    for (int e = 0; e < ne; ++e) {
        const TreeEdge& ed = tree.edge(e);
        std::vector<std::pair<double, double>> sites{{0.0, field[ed.u]},
                                                     {ed.length, field[ed.v]}};
        for (const TreePoint& p : x.points)
            if (!p.is_vertex() && p.edge == e) sites.push_back({p.offset, 0.0});
        sup = std::max(sup, edge_envelope_max(ed.length, sites));
    }
    return sup;
}

TreeReport tree_report(const MetricTree& tree, const TreeSubsetX& x, bool gh_check,
                       const GhBudget& budget) {
    TreeReport rep;
    const Tol& tol = tree.tol();

    FiniteMetricSpace xspace = subset_space(tree, x);
    {
        Matrix u = minimax_matrix(xspace);
        for (int i = 0; i < u.size(); ++i)
            for (int j = i + 1; j < u.size(); ++j) rep.u_diam = std::max(rep.u_diam, u(i, j));
    }

    if (tree.edge_count() == 0) {
        // X is the single vertex; every quantity degenerates to zero.
        rep.condition = BoundaryCondition::BoundaryEmpty;
        rep.identity_checked = true;
    } else {
        rep.d_h = hausdorff_to_tree(tree, x);
        Classification cls = classify(tree, x);
        if (cls.boundary.empty()) {
            rep.condition = BoundaryCondition::BoundaryEmpty;
        } else {
            rep.boundary_gap =
                oriented_hausdorff_subsets(cls.boundary, IntervalUnion::from_points(tree, x));
            rep.condition = tol.gt(rep.d_h, rep.boundary_gap) ? BoundaryCondition::Holds
                                                              : BoundaryCondition::Fails;
        }
        rep.identity_checked = rep.condition != BoundaryCondition::Fails;
        rep.identity_residual = std::fabs(rep.u_diam - 2.0 * rep.d_h);
    }
    rep.pass = !rep.identity_checked || tol.zero(rep.identity_residual);

    if (gh_check) {
        UltrametricResult ur = ultrametrize(xspace);
        rep.gh_spot = gh_exact(ur.quotient, FiniteMetricSpace::point("*", tree.eps()), budget).value;
    }
    return rep;
}

}  // namespace ghgeom
