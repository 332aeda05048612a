#include "doctest.h"

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ghgeom/correspondence.hpp"
#include "ghgeom/generators.hpp"
#include "ghgeom/interval_union.hpp"
#include "ghgeom/metric_space.hpp"
#include "ghgeom/metric_tree.hpp"
#include "ghgeom/reference.hpp"
#include "ghgeom/ultrametric.hpp"

using namespace ghgeom;

TEST_SUITE_BEGIN("parallel");

namespace {

/// Runs `body` with the OpenMP thread count forced to `threads`, restoring
/// the previous setting. Without OpenMP the body just runs once.
template <typename F>
auto with_threads(int threads, F body) {
#ifdef _OPENMP
    const int before = omp_get_max_threads();
    omp_set_num_threads(threads);
    auto result = body();
    omp_set_num_threads(before);
    return result;
#else
    (void)threads;
    return body();
#endif
}

/// A bundle of values produced by every parallel kernel on fixed inputs;
/// the suite requires these to be bit-identical across schedules.
std::vector<double> kernel_signature() {
    std::vector<double> sig;

    // Large oriented Hausdorff (the kernel parallelizes past 256 sources).
    FiniteMetricSpace big = random_euclidean_space(300, 41, 40.0, 3, 0.05);
    std::vector<int> evens, odds;
    for (int i = 0; i < big.size(); ++i) (i % 2 == 0 ? evens : odds).push_back(i);
    sig.push_back(hausdorff(SubsetRef(big, evens), SubsetRef(big, odds)));

    // Distortion of a large relation.
    FiniteMetricSpace x = random_euclidean_space(24, 42, 10.0, 3, 0.05);
    FiniteMetricSpace y = random_euclidean_space(23, 43, 10.0, 3, 0.05);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j)
            if ((i * 31 + j * 17) % 3 != 0) pairs.push_back({i, j});
    for (int j = 0; j < y.size(); ++j) pairs.push_back({0, j});
    Correspondence r(x.size(), y.size(), pairs);
    sig.push_back(distortion(r, x, y));

    // Minimax matrix big enough to hit the parallel cross-fill.
    FiniteMetricSpace m = random_euclidean_space(120, 44, 60.0, 3, 0.05);
    Matrix u = minimax_matrix(m);
    double acc = 0.0;
    for (int i = 0; i < u.size(); ++i)
        for (int j = 0; j < u.size(); ++j) acc += u(i, j) * (1 + ((i + j) % 7));
    sig.push_back(acc);

    // Interval-union Hausdorff across many edges.
    MetricTree tree = random_tree(16, 45, 0.5, 2.0);
    IntervalUnion a = IntervalUnion::from_points(tree, random_tree_subset(tree, 5, 46));
    IntervalUnion b = IntervalUnion::from_points(tree, random_tree_subset(tree, 4, 47));
    sig.push_back(hausdorff_subsets(a, b));

    // Branch-and-bound GH through the parallel frontier.
    FiniteMetricSpace gx = random_euclidean_space(5, 48, 10.0, 3, 0.05);
    FiniteMetricSpace gy = random_euclidean_space(6, 49, 10.0, 3, 0.05);
    sig.push_back(gh_exact(gx, gy, GhBudget{30}, GhEngine::Parallel).value);

    return sig;
}

}  // namespace

TEST_CASE("serial and parallel gh engines agree on value and witness") {
    for (int i = 0; i < 8; ++i) {
        FiniteMetricSpace x = random_euclidean_space(3 + i % 3, 500 + i, 10.0, 3, 0.05);
        FiniteMetricSpace y = random_euclidean_space(3 + (i + 1) % 3, 560 + i, 10.0, 3, 0.05);
        GHResult serial = gh_exact(x, y, GhBudget{30}, GhEngine::Serial);
        GHResult parallel = gh_exact(x, y, GhBudget{30}, GhEngine::Parallel);
        CHECK(serial.value == parallel.value);
        CHECK(serial.witness.pairs == parallel.witness.pairs);
        CHECK(serial.exact);
        CHECK(parallel.exact);
    }
}

TEST_CASE("parallel kernels match their serial references") {
    FiniteMetricSpace big = random_euclidean_space(300, 51, 40.0, 3, 0.05);
    std::vector<int> front, back;
    for (int i = 0; i < big.size(); ++i) (i < big.size() / 2 ? front : back).push_back(i);
    SubsetRef a(big, front), b(big, back);
    CHECK(hausdorff(a, b) == reference::hausdorff_plain(big, front, back));

    FiniteMetricSpace x = random_euclidean_space(24, 52, 10.0, 3, 0.05);
    FiniteMetricSpace y = random_euclidean_space(25, 53, 10.0, 3, 0.05);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j)
            if ((i + j) % 2 == 0 || i == 0 || j == 0) pairs.push_back({i, j});
    Correspondence r(x.size(), y.size(), pairs);
    CHECK(distortion(r, x, y) == reference::distortion_plain(r, x, y));

    FiniteMetricSpace m = random_euclidean_space(120, 54, 60.0, 3, 0.05);
    CHECK(minimax_matrix(m) == reference::minimax_floyd(m.matrix()));
}

TEST_CASE("results do not depend on the thread count") {
    std::vector<double> base = with_threads(1, kernel_signature);
    for (int threads : {2, 3, 8}) {
        std::vector<double> sig = with_threads(threads, kernel_signature);
        REQUIRE(sig.size() == base.size());
        for (std::size_t i = 0; i < sig.size(); ++i) CHECK(sig[i] == base[i]);
    }
}

TEST_SUITE_END();
