#include "ghgeom/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace ghgeom {

namespace {

IntervalUnion slice_at(const IntervalUnion& a, const IntervalUnion& b, double t, double d) {
    return intersect(neighborhood(a, t), neighborhood(b, d - t));
}

}  // namespace

IntervalUnion slice(const IntervalUnion& a, const IntervalUnion& b, double t) {
    const double d = hausdorff_subsets(a, b);
    const Tol& tol = a.tree().tol();
    if (tol.lt(t, 0.0) || tol.gt(t, d))
        throw Error(ErrorKind::OutOfRange, "slice parameter " + std::to_string(t) +
                                               " outside [0, " + std::to_string(d) + "]");
    return slice_at(a, b, std::clamp(t, 0.0, d), d);
}

GeodesicCheck verify_geodesic(const IntervalUnion& a, const IntervalUnion& b,
                              std::vector<double> grid) {
    if (grid.empty()) throw Error(ErrorKind::BadParams, "geodesic grid needs at least one value");
    GeodesicCheck check;
    check.d = hausdorff_subsets(a, b);
    const Tol& tol = a.tree().tol();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && grid[i] < grid[i - 1])
            throw Error(ErrorKind::BadParams, "geodesic grid must be nondecreasing");
        if (tol.lt(grid[i], 0.0) || tol.gt(grid[i], check.d))
            throw Error(ErrorKind::OutOfRange, "grid value " + std::to_string(grid[i]) +
                                                   " outside [0, " + std::to_string(check.d) +
                                                   "]");
        grid[i] = std::clamp(grid[i], 0.0, check.d);
    }
    check.grid = std::move(grid);

    const int k = static_cast<int>(check.grid.size());
    check.slices.reserve(k);
    for (int i = 0; i < k; ++i) check.slices.push_back(slice_at(a, b, check.grid[i], check.d));

    check.pairwise = Matrix(k, 0.0);
    std::vector<std::pair<int, int>> jobs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) jobs.push_back({i, j});
    const int njobs = static_cast<int>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (njobs > 4)
    for (int q = 0; q < njobs; ++q) {
        auto [i, j] = jobs[q];
        double h = hausdorff_subsets(check.slices[i], check.slices[j]);
        check.pairwise(i, j) = h;
        check.pairwise(j, i) = h;
    }

    double worst = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            worst = std::max(worst,
                             std::fabs(check.pairwise(i, j) - (check.grid[j] - check.grid[i])));
    // Endpoint identities: C_0 == a and C_d == b as sets.
    for (int i = 0; i < k; ++i) {
        if (check.grid[i] <= tol.eps)
            worst = std::max(worst, hausdorff_subsets(check.slices[i], a));
        if (check.grid[i] >= check.d - tol.eps)
            worst = std::max(worst, hausdorff_subsets(check.slices[i], b));
    }
    check.worst_residual = worst;
    check.additive = tol.zero(worst);
    return check;
}

std::vector<double> uniform_grid(double d, int k) {
    if (k < 1) throw Error(ErrorKind::BadParams, "grid needs at least one step");
    std::vector<double> g(k + 1);
    for (int i = 0; i <= k; ++i) g[i] = d * i / k;
    return g;
}

}  // namespace ghgeom
