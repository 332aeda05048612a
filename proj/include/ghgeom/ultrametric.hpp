#pragma once

#include <string>
#include <vector>

#include "ghgeom/correspondence.hpp"
#include "ghgeom/metric_space.hpp"

namespace ghgeom {

/// Minimax distances, zero-distance classes, the projection onto classes,
/// and the quotient space they carry.
struct UltrametricResult {
    Matrix u_matrix;                       // on the original points
    std::vector<std::vector<int>> classes;  // ordered by smallest member
    std::vector<int> projection;            // point index -> class index
    FiniteMetricSpace quotient;
};

/// Largest step of a point sequence; 0 for a single-point line.
double dotted_length(const std::vector<int>& line, const FiniteMetricSpace& space);

/// Minimax (bottleneck) distance for every pair, computed by single-linkage
/// merging: sort the pairs, merge components in order, and record the merge
/// weight for every cross pair. O(n^2 log n).
Matrix minimax_of(const Matrix& dist);
Matrix minimax_matrix(const FiniteMetricSpace& space);

/// Quotient by zero (<= eps) minimax distance. Accepts a raw symmetric
/// matrix so pseudometric inputs (the only place the toolkit glues points)
/// are handled here and nowhere else.
UltrametricResult ultrametrize_matrix(const Matrix& dist, const std::vector<std::string>& labels,
                                      double eps);
UltrametricResult ultrametrize(const FiniteMetricSpace& space);

/// gh_exact between the two quotients: a certified lower bound for the
/// Gromov--Hausdorff distance of the originals.
double gh_lower_ultra(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                      const GhBudget& budget = {});

/// Half the diameter of the quotient: the distance from the space to the
/// class of path-connected spaces.
double connectivity_defect(const FiniteMetricSpace& space);

/// True iff the graph with edges {d <= t} is connected, equivalently
/// t >= diam of the minimax matrix (within eps).
bool threshold_connected(const FiniteMetricSpace& space, double t);

}  // namespace ghgeom
