#pragma once

#include <span>
#include <string>
#include <vector>

#include "ghgeom/common.hpp"

namespace ghgeom {

/// Labeled finite metric space with a validated dense distance matrix.
///
/// Construction enforces: symmetry (within eps, then exact symmetrization
/// from the upper triangle), zero diagonal, no negative entries, all
/// off-diagonal entries > eps (true metric; near-duplicates are rejected),
/// and the triangle inequality within eps for every triple.
class FiniteMetricSpace {
public:
    FiniteMetricSpace(std::vector<std::string> labels, const std::vector<std::vector<double>>& matrix,
                      double eps = kDefaultEps);
    FiniteMetricSpace(std::vector<std::string> labels, Matrix matrix, double eps = kDefaultEps);

    /// The canonical one-point space.
    static FiniteMetricSpace point(std::string label = "*", double eps = kDefaultEps);

    int size() const { return dist_.size(); }
    double dist(int i, int j) const { return dist_(i, j); }
    const Matrix& matrix() const { return dist_; }
    const std::vector<std::string>& labels() const { return labels_; }
    double eps() const { return tol_.eps; }
    const Tol& tol() const { return tol_; }

private:
    void validate();

    std::vector<std::string> labels_;
    Matrix dist_;
    Tol tol_;
};

/// Nonempty subset of a space, by point indices (kept sorted and unique).
struct SubsetRef {
    const FiniteMetricSpace* space = nullptr;
    std::vector<int> members;

    SubsetRef(const FiniteMetricSpace& s, std::vector<int> m);
};

/// Max over all pairs; 0 for a single point.
double diameter(const FiniteMetricSpace& space);
double diameter(const SubsetRef& subset);

/// min over b in `to` of dist(from, b).
double point_to_set(const FiniteMetricSpace& space, int from, std::span<const int> to);

/// sup_{a in A} |aB|. A may be empty (returns 0); B must not be.
double oriented_hausdorff(const FiniteMetricSpace& space, std::span<const int> a, std::span<const int> b);
double oriented_hausdorff(const SubsetRef& a, const SubsetRef& b);

/// Two-sided Hausdorff distance between subsets of one ambient space.
double hausdorff(const SubsetRef& a, const SubsetRef& b);

}  // namespace ghgeom
