#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ghgeom/correspondence.hpp"
#include "ghgeom/metric_space.hpp"

namespace ghgeom {

/// Coordinates of x_i under y -> d(x_i, y) - d(x_base, y): an isometric copy
/// of the space inside sup-norm n-space with the base point at the origin.
std::vector<std::vector<double>> kuratowski_embed(const FiniteMetricSpace& x, int base = 0);

double sup_norm_dist(const std::vector<double>& a, const std::vector<double>& b);

/// Max over pairs of |sup-norm distance - original distance|; zero up to
/// rounding for a correct embedding.
double embedding_residual(const FiniteMetricSpace& x,
                          const std::vector<std::vector<double>>& coords);

/// D_t(X): the embedded points (anchors) joined by straight sup-norm
/// segments wherever d(x_i, x_j) <= t, sampled at pitch <= delta.
struct SampledComplex {
    struct Origin {
        int anchor = -1;  // >= 0 for anchor points
        int seg = -1;     // segment index for interior samples
        double s = 0.0;   // position along the segment in [0, 1]
    };

    std::vector<std::vector<double>> points;  // anchors first, then samples
    std::vector<Origin> origins;
    std::vector<std::pair<int, int>> segments;  // anchor index pairs (i < j)
    int anchor_count = 0;
    double t = 0.0;
    double delta = 0.0;
};

/// delta <= 0 picks the default t/10.
SampledComplex build_dt(const FiniteMetricSpace& x, double t, double delta = 0.0);

struct DtCheckResult {
    bool x_threshold_connected = false;  // {d <= t} graph on X connected
    bool complex_connected = false;      // segment graph of D_t(X) connected
    double correspondence_distortion = 0.0;  // nearest-anchor correspondence
    double distortion_limit = 0.0;           // == t
    std::optional<double> gh_cross;          // gh_exact(X, sampled complex)
    double gh_cross_limit = 0.0;             // == t/2 + delta
    bool pass = false;
};

/// Checks connectivity equivalence and that the nearest-anchor
/// correspondence (ties toward the lower anchor index) distorts by at most
/// t. When |X| * |complex| fits the budget, cross-checks gh_exact(X, D_t
/// sample) <= t/2 + delta.
DtCheckResult dt_check(const FiniteMetricSpace& x, double t, double delta = 0.0,
                       const GhBudget& budget = {});

}  // namespace ghgeom
