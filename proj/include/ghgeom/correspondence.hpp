#pragma once

#include <cstdint>
#include <vector>

#include "ghgeom/metric_space.hpp"

namespace ghgeom {

/// Relation between two point sets covering both sides.
struct Correspondence {
    int nx = 0;
    int ny = 0;
    std::vector<std::pair<int, int>> pairs;  // sorted, unique

    Correspondence() = default;
    Correspondence(int nx_, int ny_, std::vector<std::pair<int, int>> pairs_);

    static Correspondence identity(int n);
    Correspondence transposed() const;
};

/// sup over pairs of pairs of | |xx'| - |yy'| |.
double distortion(const Correspondence& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y);

struct GhBudget {
    int max_cells = 30;  // hard wall on |X| * |Y|
};

enum class GhEngine {
    Auto,      // parallel when OpenMP is available and the problem is nontrivial
    Serial,    // single-threaded search, deterministic node count
    Parallel,  // worker-parallel subtree search with a shared incumbent
};

struct GHResult {
    double value = 0.0;          // half the minimal distortion
    Correspondence witness;      // lexicographically smallest optimal witness
    long long nodes_explored = 0;  // search diagnostic; schedule-dependent under the parallel engine
    bool exact = true;
};

/// Exact Gromov--Hausdorff distance by branch-and-bound over correspondences.
/// Points of the smaller space are processed in decreasing eccentricity order,
/// each assigned a nonempty target set; the running distortion is a monotone
/// lower bound used for pruning. Value and witness are deterministic and
/// symmetric in the arguments (the witness transposes).
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const GhBudget& budget = {},
                  GhEngine engine = GhEngine::Auto);

/// |diam X - diam Y| / 2, a cheap lower bound for gh_exact.
double gh_lower_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace ghgeom
