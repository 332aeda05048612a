#pragma once

#include <optional>

#include "ghgeom/correspondence.hpp"
#include "ghgeom/interval_union.hpp"
#include "ghgeom/metric_tree.hpp"

namespace ghgeom {

/// Convex hull (smallest subtree containing X) and the closure of its
/// complement. Interior points of the tree relative to X are hull minus X;
/// the boundary set collects everything the hull misses.
struct Classification {
    IntervalUnion hull;
    IntervalUnion boundary;
};

/// On an edgeless (single-vertex) tree both unions come back structurally
/// empty: X is the whole tree and there is nothing to classify.
Classification classify(const MetricTree& tree, const TreeSubsetX& x);

/// d_H(X, T): sup over the tree of the distance to X, exact via the
/// per-edge lower envelope of distance cones.
double hausdorff_to_tree(const MetricTree& tree, const TreeSubsetX& x);

enum class BoundaryCondition {
    BoundaryEmpty,  // hull is the whole tree
    Holds,          // d_H(X, T) > sup_{boundary} dist(., X)
    Fails,          // d_H(X, T) <= sup_{boundary} dist(., X)
};

const char* to_string(BoundaryCondition c);

struct TreeReport {
    double d_h = 0.0;            // d_H(X, T)
    double boundary_gap = 0.0;   // sup_{boundary} dist(., X); 0 when boundary empty
    BoundaryCondition condition = BoundaryCondition::BoundaryEmpty;
    double u_diam = 0.0;         // diameter of the minimax matrix of X
    bool identity_checked = false;  // condition != Fails
    double identity_residual = 0.0; // |u_diam - 2 d_h|
    bool pass = true;               // identity holds whenever it is asserted
    std::optional<double> gh_spot;  // gh_exact(ultrametric quotient of X, one point)
};

/// The boundary-condition report: when the condition does not fail,
/// u_diam == 2 * d_h within eps. `gh_check` adds the quotient-vs-point
/// GH spot value (always 2*gh_spot == u_diam when present).
TreeReport tree_report(const MetricTree& tree, const TreeSubsetX& x, bool gh_check = false,
                       const GhBudget& budget = {});

}  // namespace ghgeom
