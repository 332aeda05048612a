#pragma once

#include <vector>

#include "ghgeom/metric_tree.hpp"

namespace ghgeom {

/// Closed interval [lo, hi] in edge coordinates; lo == hi is a point.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Closed subset of a metric tree stored as disjoint closed intervals per
/// edge. `normalize()` establishes the canonical form: intervals clamped to
/// the edge, sorted, merged when they touch within eps, and every covered
/// vertex materialized as an (possibly degenerate) interval end on each of
/// its incident edges. All set operations assume and preserve this form.
class IntervalUnion {
public:
    explicit IntervalUnion(const MetricTree& tree);

    static IntervalUnion whole(const MetricTree& tree);
    static IntervalUnion from_points(const MetricTree& tree, const std::vector<TreePoint>& pts);
    static IntervalUnion from_points(const MetricTree& tree, const TreeSubsetX& x);
    /// The geodesic segment [p, q].
    static IntervalUnion segment(const MetricTree& tree, const TreePoint& p, const TreePoint& q);

    const MetricTree& tree() const { return *tree_; }
    /// Appends [lo, hi] clamped to edge e; quietly drops genuinely empty
    /// pieces and collapses eps-inverted ones to their midpoint.
    void add(int e, double lo, double hi);
    void add_point(const TreePoint& p);
    void normalize();

    bool empty() const;
    const std::vector<Interval>& on_edge(int e) const { return per_edge_[e]; }
    bool vertex_covered(int v) const;
    bool contains(const TreePoint& p) const;
    /// Canonical points at the interval endpoints, deduplicated.
    std::vector<TreePoint> endpoints() const;
    /// Number of intervals across all edges.
    int piece_count() const;

private:
    const MetricTree* tree_;
    std::vector<std::vector<Interval>> per_edge_;
};

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
/// Closure of tree minus s.
IntervalUnion complement(const IntervalUnion& s);

/// min distance from vertex v to s (infinity if s is empty).
std::vector<double> vertex_field(const IntervalUnion& s);

/// Geodesic distance from a point to a nonempty union.
double point_to_union(const TreePoint& p, const IntervalUnion& s);

/// Closed r-neighborhood B_r(s); r must be >= 0 (within eps).
IntervalUnion neighborhood(const IntervalUnion& s, double r);

/// sup_{p in a} dist(p, b), exact via the per-edge lower envelope of the
/// distance field (piecewise linear with slopes +-1). a may be empty
/// (returns 0); b must not be.
double oriented_hausdorff_subsets(const IntervalUnion& a, const IntervalUnion& b);
double hausdorff_subsets(const IntervalUnion& a, const IntervalUnion& b);

/// Max minimax distance over the union: 0 iff connected. Components are
/// joined through interval endpoints, whose pairwise bottleneck distances
/// decide the value.
double u_diameter(const IntervalUnion& s);

}  // namespace ghgeom
