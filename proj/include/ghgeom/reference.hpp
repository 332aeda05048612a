#pragma once

#include <vector>

#include "ghgeom/correspondence.hpp"
#include "ghgeom/interval_union.hpp"
#include "ghgeom/metric_space.hpp"
#include "ghgeom/metric_tree.hpp"

namespace ghgeom::reference {

/// Oracles for checking the production paths. Everything here is written
/// against different algorithms than the code under test: plain loops,
/// exhaustive enumeration, Floyd-style DP, and dense sampling. Keep it that
/// way -- these implementations must not share logic with the main library.

/// Distortion by definition: double loop over relation pairs, no kernel.
double distortion_plain(const Correspondence& r, const FiniteMetricSpace& x,
                        const FiniteMetricSpace& y);

/// Minimax distances by Floyd-Warshall-style DP: u_ij = min_k max(u_ik, u_kj).
Matrix minimax_floyd(const Matrix& dist);

/// Minimax distances by enumerating dotted lines with a (mask, last) DP;
/// exponential, guarded to n <= 12.
Matrix minimax_paths(const Matrix& dist);

/// GH distance by enumerating every coverage-complete relation as a bitmask
/// over the |X| x |Y| grid; guarded to |X| * |Y| <= 16.
double gh_enumerate(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Hausdorff distance between index sets by definition, serial.
double hausdorff_plain(const FiniteMetricSpace& space, const std::vector<int>& a,
                       const std::vector<int>& b);

/// Dense sample of a whole tree / of an interval union, pitch <= step.
std::vector<TreePoint> sample_tree(const MetricTree& tree, double step);
std::vector<TreePoint> sample_union(const IntervalUnion& s, double step);

/// d_H(X, T) estimated from a dense sample; error at most step.
double tree_hausdorff_sampled(const MetricTree& tree, const TreeSubsetX& x, double step);

/// d_H between unions estimated from dense samples of both; error at most
/// 2 * step.
double union_hausdorff_sampled(const IntervalUnion& a, const IntervalUnion& b, double step);

/// Minimax diameter of a union estimated from a dense sample; error at most
/// 2 * step.
double u_diameter_sampled(const IntervalUnion& s, double step);

}  // namespace ghgeom::reference
