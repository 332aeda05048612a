#include "ghgeom/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ghgeom {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     const std::vector<std::vector<double>>& matrix, double eps)
    : FiniteMetricSpace(std::move(labels), Matrix::from_rows(matrix), eps) {}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, Matrix matrix, double eps)
    : labels_(std::move(labels)), dist_(std::move(matrix)), tol_{eps} {
    validate();
}

FiniteMetricSpace FiniteMetricSpace::point(std::string label, double eps) {
    return FiniteMetricSpace({std::move(label)}, Matrix(1), eps);
}

void FiniteMetricSpace::validate() {
    const int n = dist_.size();
    if (n == 0) throw Error(ErrorKind::EmptySpace, "a metric space needs at least one point");
    if (static_cast<int>(labels_.size()) != n)
        throw Error(ErrorKind::ValidationError, "label count does not match matrix size");
    if (tol_.eps <= 0.0) throw Error(ErrorKind::ValidationError, "eps must be positive");

    for (int i = 0; i < n; ++i) {
        if (dist_(i, i) != 0.0)
            throw Error(ErrorKind::NonzeroDiagonal, "diagonal entry is not zero at " + labels_[i], {i});
        for (int j = i + 1; j < n; ++j) {
            if (dist_(i, j) < 0.0 || dist_(j, i) < 0.0)
                throw Error(ErrorKind::NegativeDistance,
                            "negative distance between " + labels_[i] + " and " + labels_[j], {i, j});
            if (std::abs(dist_(i, j) - dist_(j, i)) > tol_.eps)
                throw Error(ErrorKind::AsymmetricMatrix,
                            "asymmetric distances between " + labels_[i] + " and " + labels_[j], {i, j});
            dist_(j, i) = dist_(i, j);
            if (dist_(i, j) <= tol_.eps)
                throw Error(ErrorKind::DuplicatePoint,
                            labels_[i] + " and " + labels_[j] + " are closer than eps", {i, j});
        }
    }

    // Worst triangle defect d(i,k) - d(i,j) - d(j,k); a positive value beyond
    // eps means the triple (i,j,k) is not metric.
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static) if (n > 64)
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            const double dik = dist_(i, k);
            for (int j = 0; j < n; ++j) {
                const double defect = dik - dist_(i, j) - dist_(j, k);
                if (defect > worst) worst = defect;
            }
        }
    }
    if (worst > tol_.eps) {
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    if (dist_(i, k) - dist_(i, j) - dist_(j, k) == worst)
                        throw Error(ErrorKind::TriangleViolation,
                                    "triangle inequality fails for (" + labels_[i] + ", " + labels_[j] +
                                        ", " + labels_[k] + ")",
                                    {i, j, k});
    }
}

SubsetRef::SubsetRef(const FiniteMetricSpace& s, std::vector<int> m) : space(&s), members(std::move(m)) {
    if (members.empty()) throw Error(ErrorKind::EmptySpace, "subset must be nonempty");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int i : members)
        if (i < 0 || i >= s.size())
            throw Error(ErrorKind::IndexOutOfRange, "subset member out of range", {i});
}

double diameter(const FiniteMetricSpace& space) {
    const int n = space.size();
    double best = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) best = std::max(best, space.dist(i, j));
    return best;
}

double diameter(const SubsetRef& subset) {
    double best = 0.0;
    for (size_t i = 0; i < subset.members.size(); ++i)
        for (size_t j = i + 1; j < subset.members.size(); ++j)
            best = std::max(best, subset.space->dist(subset.members[i], subset.members[j]));
    return best;
}

double point_to_set(const FiniteMetricSpace& space, int from, std::span<const int> to) {
    double best = std::numeric_limits<double>::infinity();
    for (int b : to) best = std::min(best, space.dist(from, b));
    return best;
}

double oriented_hausdorff(const FiniteMetricSpace& space, std::span<const int> a, std::span<const int> b) {
    if (b.empty()) throw Error(ErrorKind::EmptyTarget, "oriented Hausdorff target must be nonempty");
    if (a.empty()) return 0.0;  // sup over the empty set, by convention
    const int na = static_cast<int>(a.size());
    double sup = 0.0;
#pragma omp parallel for reduction(max : sup) schedule(static) if (na > 256)
    for (int i = 0; i < na; ++i) {
        const double d = point_to_set(space, a[i], b);
        if (d > sup) sup = d;
    }
    return sup;
}

double oriented_hausdorff(const SubsetRef& a, const SubsetRef& b) {
    if (a.space != b.space)
        throw Error(ErrorKind::DifferentAmbient, "subsets live in different ambient spaces");
    return oriented_hausdorff(*a.space, a.members, b.members);
}

double hausdorff(const SubsetRef& a, const SubsetRef& b) {
    return std::max(oriented_hausdorff(a, b), oriented_hausdorff(b, a));
}

}  // namespace ghgeom
