#pragma once

#include <vector>

#include "ghgeom/interval_union.hpp"

namespace ghgeom {

/// C_t = B_t(a) intersect B_{d-t}(b) where d = d_H(a, b): the canonical
/// Hausdorff geodesic between two closed subsets of a tree at parameter t.
/// t must lie in [0, d] (within eps).
IntervalUnion slice(const IntervalUnion& a, const IntervalUnion& b, double t);

struct GeodesicCheck {
    double d = 0.0;                    // d_H(a, b)
    std::vector<double> grid;          // the checked parameters, clamped to [0, d]
    std::vector<IntervalUnion> slices;
    Matrix pairwise;                   // d_H(C_i, C_j)
    double worst_residual = 0.0;       // additivity plus endpoint identities
    bool additive = false;
};

/// Builds the slice at every grid value and checks d_H(C_i, C_j) ==
/// |t_i - t_j| for all pairs, plus C == a (resp. b) wherever the grid
/// touches 0 (resp. d). Grid must be nondecreasing and inside [0, d].
GeodesicCheck verify_geodesic(const IntervalUnion& a, const IntervalUnion& b,
                              std::vector<double> grid);

/// k+1 evenly spaced values covering [0, d].
std::vector<double> uniform_grid(double d, int k);

}  // namespace ghgeom
